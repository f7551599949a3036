"""The holomorph Hol(G) = G x| Aut(G): pair arithmetic, actions, and regular
embeddings.

Elements are pairs [g, alpha] with g an element index of a Cayley-indexed
group and alpha an automorphism (a permutation of element indices fixing 0),
multiplied by

    [g1, a1][g2, a2] = [g1 * a1(g2), a1 a2]

and acting on element indices by t -> g * alpha(t).  A HolContext interns the
automorphism tuples it has seen and memoizes their pairwise compositions, so
holomorph arithmetic over big groups (A8 with 20160 elements) costs dictionary
lookups instead of repeated 20160-entry array compositions.

A regular embedding Gamma -> Hol(G) is stored as generator images.  Its
verification is exact, not sampled: the images are propagated over the whole
Cayley graph of Gamma and every edge is checked, which proves the homomorphism
law, and the orbit of the identity index has size |G| iff the image is regular
(the image order is at most |Gamma| = |G| and at least the orbit size).
"""

from __future__ import annotations

from .cayley import CayleyIndexedGroup, index_group
from .perm import PermGroup, Permutation, tidentity, tinv, tmul


class HolContext:
    """Arithmetic context for Hol(G) over a Cayley-indexed group."""

    def __init__(self, indexed: CayleyIndexedGroup):
        self.group = indexed
        self.n = indexed.n
        self._alpha_of = {}
        self._alphas = []
        self._compose_memo = {}
        self._inverse_memo = {}
        self._conjugation_memo = {}
        self.identity_alpha = self.intern_alpha(tidentity(self.n))
        self.identity = (0, self.identity_alpha)

    # -- automorphism interning -------------------------------------------------

    def intern_alpha(self, alpha) -> int:
        alpha = tuple(alpha)
        known = self._alpha_of.get(alpha)
        if known is not None:
            return known
        if alpha[0] != 0:
            raise ValueError("automorphism must fix the identity index")
        aid = len(self._alphas)
        self._alpha_of[alpha] = aid
        self._alphas.append(alpha)
        return aid

    def alpha_tuple(self, aid: int):
        return self._alphas[aid]

    def compose_alphas(self, a: int, b: int) -> int:
        if a == self.identity_alpha:
            return b
        if b == self.identity_alpha:
            return a
        memo = self._compose_memo
        key = (a, b)
        known = memo.get(key)
        if known is None:
            known = self.intern_alpha(tmul(self._alphas[a], self._alphas[b]))
            memo[key] = known
        return known

    def invert_alpha(self, a: int) -> int:
        known = self._inverse_memo.get(a)
        if known is None:
            known = self.intern_alpha(tinv(self._alphas[a]))
            self._inverse_memo[a] = known
            self._inverse_memo[known] = a
        return known

    def conjugation(self, g: int) -> int:
        """C(g): x -> g x g^-1, interned."""
        known = self._conjugation_memo.get(g)
        if known is None:
            group = self.group
            g_inv = group.inv(g)
            known = self.intern_alpha(
                tuple(group.mult(group.mult(g, x), g_inv) for x in range(self.n))
            )
            self._conjugation_memo[g] = known
        return known

    def is_automorphism(self, alpha, exhaustive: bool = True, rng=None, samples: int = 200) -> bool:
        """Check that a tuple respects the multiplication table (exhaustively,
        or on random pairs for big groups)."""
        alpha = tuple(alpha)
        if alpha[0] != 0 or sorted(alpha) != list(range(self.n)):
            return False
        group = self.group
        if exhaustive:
            pairs = ((x, y) for x in range(self.n) for y in range(self.n))
        else:
            pairs = ((rng.randrange(self.n), rng.randrange(self.n)) for _ in range(samples))
        return all(
            alpha[group.mult(x, y)] == group.mult(alpha[x], alpha[y]) for x, y in pairs
        )

    # -- pair arithmetic -----------------------------------------------------------

    def mult(self, x, y):
        """[g1,a1][g2,a2] = [g1 * a1(g2), a1 a2]."""
        g1, a1 = x
        g2, a2 = y
        return (self.group.mult(g1, self._alphas[a1][g2]), self.compose_alphas(a1, a2))

    def inv(self, x):
        g, a = x
        a_inv = self.invert_alpha(a)
        return (self._alphas[a_inv][self.group.inv(g)], a_inv)

    def act(self, x, t: int) -> int:
        """[g, alpha] . t = g * alpha(t)."""
        g, a = x
        return self.group.mult(g, self._alphas[a][t])

    def element_perm(self, x):
        """The degree-n permutation tuple of a holomorph element."""
        g, a = x
        group = self.group
        alpha = self._alphas[a]
        if group._table is not None:
            row = group._table[g]
            return tuple(row[alpha[t]] for t in range(self.n))
        return tuple(group.mult(g, alpha[t]) for t in range(self.n))

    def decode_perm(self, perm):
        """Recover the unique pair [g, alpha] from its action permutation."""
        perm = tuple(perm)
        g = perm[0]
        g_inv = self.group.inv(g)
        if self.group._table is not None:
            row = self.group._table[g_inv]
            alpha = tuple(row[perm[t]] for t in range(self.n))
        else:
            alpha = tuple(self.group.mult(g_inv, perm[t]) for t in range(self.n))
        return (g, self.intern_alpha(alpha))

    # -- distinguished elements ------------------------------------------------------

    def lam(self, g: int):
        """Left translation [g, id]."""
        return (g, self.identity_alpha)

    def rho(self, g: int):
        """Right translation by g^-1: [g^-1, C(g)] sends t to t * g^-1."""
        return (self.group.inv(g), self.conjugation(g))

    def serialize(self, x):
        g, a = x
        return {"g": g, "alpha": list(self._alphas[a])}


def hol_context(group: PermGroup | CayleyIndexedGroup, cap: int = 10**5) -> HolContext:
    indexed = group if isinstance(group, CayleyIndexedGroup) else index_group(group, cap=cap)
    return HolContext(indexed)


def hol_mult(ctx: HolContext, x, y):
    return ctx.mult(x, y)


def hol_action(ctx: HolContext, x, t: int) -> int:
    return ctx.act(x, t)


def conjugation_aut(ctx: HolContext, g: int):
    """The inner automorphism x -> g x g^-1 as an index tuple."""
    return ctx.alpha_tuple(ctx.conjugation(g))


def hol_group(group: PermGroup, aut_group: PermGroup | None = None, cap: int = 10**5) -> PermGroup:
    """Hol(G) as a permutation group of degree |G| on element indices,
    generated by the left translations and Aut(G).  Order |G| * |Aut(G)|."""
    from .isoaut import automorphism_group

    indexed = index_group(group, cap=cap)
    if aut_group is None:
        aut_group = automorphism_group(group)
    gens = []
    for g in indexed.generator_indices():
        perm = Permutation(indexed.left_translation(g))
        if not perm.is_identity():
            gens.append(perm)
    gens.extend(aut_group.generators)
    result = PermGroup(gens, degree=indexed.n) if gens else PermGroup.trivial(indexed.n)
    expected = indexed.n * aut_group.order()
    if result.order() != expected:
        raise AssertionError(
            "Hol(G) has order %d, expected %d" % (result.order(), expected)
        )
    return result


class RegularEmbedding:
    """A homomorphism Gamma -> Hol(G) given on generators, with a regularity
    certificate filled in by verify()."""

    def __init__(self, source: PermGroup, ctx: HolContext, images):
        if len(images) != len(source.generators):
            raise ValueError("need one image per generator")
        self.source = source
        self.ctx = ctx
        self.images = [tuple(x) for x in images]
        self.certificate = None
        self._map = None

    @classmethod
    def from_subgroup(cls, ctx: HolContext, element_perms) -> "RegularEmbedding":
        """Inclusion embedding of a regular subgroup of Hol(G) given by the
        action permutations of its elements (or generators)."""
        perms = [p if isinstance(p, Permutation) else Permutation(p) for p in element_perms]
        gens = [p for p in perms if not p.is_identity()]
        source = PermGroup(gens, degree=ctx.n)
        return cls(source, ctx, [ctx.decode_perm(g.images) for g in source.generators])

    def full_map(self, cap: int = 10**5):
        """beta on every element of Gamma: a dict perm-tuple -> hol pair.

        Built by BFS over the source Cayley graph; every non-tree edge is
        checked, so success proves the homomorphism law exhaustively.
        """
        if self._map is not None:
            return self._map
        source_order = self.source.order()
        if source_order > cap:
            raise ValueError("embedding map cap %d exceeded: order %d" % (cap, source_order))
        ctx = self.ctx
        gen_images = {
            gen.images: image for gen, image in zip(self.source.generators, self.images)
        }
        identity = tidentity(self.source.degree)
        beta = {identity: ctx.identity}
        queue = [identity]
        order = [identity]
        gens = [(g.images, gen_images[g.images]) for g in self.source.generators]
        while queue:
            current = queue.pop(0)
            image = beta[current]
            for gen_perm, gen_image in gens:
                product = tmul(current, gen_perm)
                product_image = ctx.mult(image, gen_image)
                known = beta.get(product)
                if known is None:
                    beta[product] = product_image
                    queue.append(product)
                    order.append(product)
                elif known != product_image:
                    raise ValueError("generator images do not define a homomorphism")
        if len(beta) != source_order:
            raise ValueError("generator images do not define a homomorphism")
        self._map = beta
        return beta

    def image_orbit_size(self) -> int:
        """Size of the orbit of the identity index under the image generators."""
        ctx = self.ctx
        seen = {0}
        queue = [0]
        images = self.images + [ctx.inv(x) for x in self.images]
        while queue:
            t = queue.pop()
            for x in images:
                u = ctx.act(x, t)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen)

    def verify(self, cap: int = 10**5) -> dict:
        """Prove the homomorphism law and regularity; returns the certificate.

        Regularity argument: |image| <= |Gamma| always, and |image| >= orbit
        size of the identity point; with |Gamma| = |G| = n and orbit size n the
        image is transitive of order exactly n, hence regular, and beta is
        injective.
        """
        if self.certificate is not None:
            return self.certificate
        n = self.ctx.n
        source_order = self.source.order()
        self.full_map(cap=cap)  # raises if not a homomorphism
        orbit = self.image_orbit_size()
        regular = source_order == n and orbit == n
        self.certificate = {
            "homomorphism": True,
            "source_order": source_order,
            "degree": n,
            "orbit_size": orbit,
            "regular": regular,
            "injective": regular,
        }
        return self.certificate

    def is_regular(self) -> bool:
        return self.verify()["regular"]

    def image_generator_perms(self):
        return [self.ctx.element_perm(x) for x in self.images]

    def image_permutation_group(self) -> PermGroup:
        """The image as a PermGroup on element indices (small degrees only)."""
        gens = [Permutation(p) for p in self.image_generator_perms()]
        gens = [p for p in gens if not p.is_identity()]
        if not gens:
            return PermGroup.trivial(self.ctx.n)
        return PermGroup(gens, degree=self.ctx.n)

    def serialize(self):
        return {
            "generators": [g.cycle_string() for g in self.source.generators],
            "images": [self.ctx.serialize(x) for x in self.images],
        }


def lambda_embedding(ctx: HolContext, source: PermGroup | None = None) -> RegularEmbedding:
    """The left regular embedding of G itself into Hol(G)."""
    group = ctx.group
    if source is None:
        source = group.source
    images = [ctx.lam(group.index[g.images]) for g in source.generators]
    return RegularEmbedding(source, ctx, images)


def rho_embedding(ctx: HolContext, source: PermGroup | None = None) -> RegularEmbedding:
    """The right regular embedding g -> [g^-1, C(g)]."""
    group = ctx.group
    if source is None:
        source = group.source
    images = [ctx.rho(group.index[g.images]) for g in source.generators]
    return RegularEmbedding(source, ctx, images)
