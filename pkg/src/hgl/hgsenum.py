"""Regular subgroups of Hol(G), Hopf-Galois structure counts, Hall-subgroup
extraction and complementary subgroups.

The enumeration works on the degree-n action permutations of holomorph
elements.  A backtracking search maintains a semiregular partial subgroup S:
at each node it picks the least point x outside the orbit of 0 (which is
{s(0) : s in S}), branches over the precomputed semiregular elements h with
h(0) = x, and extends S to <S, h> by a Dimino coset sweep that aborts as soon
as the closure exceeds |G|, stops dividing |G|, or acquires an element with a
fixed point.  States are deduplicated by their element sets, results when
|S| = |G| (a semiregular subgroup of full order is transitive, hence regular).

Counting Hopf-Galois structures of type G on Gamma-extensions then means:
collect the regular subgroups isomorphic to Gamma, expand each into all
|Aut(Gamma)| regular embeddings, and count orbits of the Aut(G)-conjugation
action by explicit closure over generator-image fingerprints.  The quotient
formula |Aut(Gamma)| * #subgroups / |Aut(G)| is computed independently as a
cross-check and any discrepancy is surfaced, never reconciled.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction

from .catalog import build_group
from .cayley import index_group
from .holomorph import HolContext, RegularEmbedding, hol_context
from .isoaut import are_isomorphic, automorphism_group, automorphisms
from .perm import (
    PermGroup,
    Permutation,
    is_uniform_cycle_tuple,
    tidentity,
    tinv,
    tmul,
)

ENUM_ORDER_CAP = 60
DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """Raised when the node budget runs out; never a silent undercount."""

    def __init__(self, nodes: int):
        super().__init__("search budget exhausted after %d nodes" % nodes)
        self.nodes = nodes
        self.partial = False  # no partial results are ever returned


@dataclass
class RegularSubgroupRecord:
    """One regular subgroup of Hol(G), as its sorted action permutations."""

    elements: tuple
    iso_spec: str | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def fingerprint(self) -> str:
        blob = repr(self.elements).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def permutation_group(self) -> PermGroup:
        gens = [Permutation(p) for p in self.elements if p != tidentity(len(self.elements[0]))]
        if not gens:
            return PermGroup.trivial(len(self.elements[0]))
        return PermGroup(gens, degree=len(self.elements[0]))


def hol_element_perms(ctx: HolContext, aut_maps):
    """Action permutations of all of Hol(G), streamed one tuple at a time."""
    group = ctx.group
    n = ctx.n
    for alpha in aut_maps:
        for g in range(n):
            if group._table is not None:
                row = group._table[g]
                perm = tuple(row[alpha[t]] for t in range(n))
            else:
                perm = tuple(group.mult(g, alpha[t]) for t in range(n))
            yield perm


def semiregular_element_buckets(ctx: HolContext, aut_maps):
    """Bucket the semiregular elements of Hol(G) by their image of 0.

    An element is kept iff all its cycles share one length > 1; such elements
    are exactly the fixed-point-free elements all of whose powers are
    fixed-point-free or trivial.
    """
    buckets = {x: [] for x in range(1, ctx.n)}
    for perm in hol_element_perms(ctx, aut_maps):
        if perm[0] != 0 and is_uniform_cycle_tuple(perm):
            buckets[perm[0]].append(perm)
    for x in buckets:
        buckets[x].sort()
    return buckets


def _dimino_extend(s_elements, s_gens, h, n, identity):
    """Closure of <S, h> as (sorted elements, gens) or None when it cannot sit
    inside a regular subgroup of order n (too big, order not dividing n, or an
    element fixes a point)."""
    result = set(s_elements)
    gens = list(s_gens) + [h]
    base = list(s_elements)

    def add_coset(rep):
        for s in base:
            e = tmul(s, rep)
            if e in result:
                continue
            if e != identity:
                for i, j in enumerate(e):
                    if i == j:
                        return None
            result.add(e)
        return True

    if h in result:
        return None  # no progress; caller never passes h with h(0) in orbit
    frontier = [h]
    if add_coset(h) is None or len(result) > n:
        return None
    while frontier:
        rep = frontier.pop()
        for g in gens:
            t = tmul(rep, g)
            if t in result:
                continue
            if add_coset(t) is None:
                return None
            if len(result) > n:
                return None
            frontier.append(t)
    if n % len(result):
        return None
    return tuple(sorted(result)), gens


def regular_subgroups_of_elements(
    candidate_buckets,
    n: int,
    budget: int = DEFAULT_BUDGET,
):
    """All regular (order n, semiregular, transitive) subgroups generable from
    the candidate buckets, as sorted element tuples.  Complete whenever the
    buckets contain every semiregular element of the ambient group."""
    identity = tidentity(n)
    if n == 1:
        return [(identity,)]
    results = []
    seen_states = set()
    nodes = 0

    def orbit_of_zero(elements):
        return {p[0] for p in elements}

    def expand(elements, gens):
        nonlocal nodes
        covered = orbit_of_zero(elements)
        x = next(t for t in range(n) if t not in covered)
        for h in candidate_buckets.get(x, ()):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(nodes)
            extended = _dimino_extend(elements, gens, h, n, identity)
            if extended is None:
                continue
            new_elements, new_gens = extended
            if new_elements in seen_states:
                continue
            seen_states.add(new_elements)
            if len(new_elements) == n:
                results.append(new_elements)
            else:
                expand(new_elements, new_gens)

    expand((identity,), [])
    return sorted(results)


def enumerate_regular_subgroups(
    group,
    aut_group: PermGroup | None = None,
    budget: int = DEFAULT_BUDGET,
    order_cap: int = ENUM_ORDER_CAP,
    iso_candidates=(),
):
    """Complete, duplicate-free list of the regular subgroups of Hol(G).

    `group` may be a PermGroup, a GroupSpec, or a spec string.  Each record
    can be tagged with the first matching iso type from `iso_candidates`
    (spec strings).
    """
    if isinstance(group, str) or hasattr(group, "kind"):
        group = build_group(group)
    if group.order() > order_cap:
        raise ValueError(
            "enumeration cap %d exceeded: order %d" % (order_cap, group.order())
        )
    ctx = hol_context(group)
    if aut_group is None:
        aut_group = automorphism_group(ctx.group)
    aut_maps = [g.images for g in aut_group.elements()]
    buckets = semiregular_element_buckets(ctx, aut_maps)
    subgroups = regular_subgroups_of_elements(buckets, ctx.n, budget=budget)
    records = []
    candidate_groups = [(spec, build_group(spec)) for spec in iso_candidates]
    for elements in subgroups:
        record = RegularSubgroupRecord(elements=elements)
        for spec, candidate in candidate_groups:
            if are_isomorphic(record.permutation_group(), candidate) is not None:
                record.iso_spec = str(spec)
                break
        records.append(record)
    return records


def _regular_cyclic_subgroups(ctx: HolContext, aut_maps):
    """Regular cyclic subgroups of Hol(G): spans of single n-cycles.  Complete
    for cyclic Gamma without the general backtracking."""
    n = ctx.n
    if n == 1:
        return [(tidentity(1),)]
    group = ctx.group
    found = {}
    for alpha in aut_maps:
        for g in range(1, n):
            # walk the cycle of 0 under t -> g*alpha(t); an n-cycle visits all
            point = 0
            length = 0
            while True:
                point = group.mult(g, alpha[point])
                length += 1
                if point == 0 or length > n:
                    break
            if length != n:
                continue
            if group._table is not None:
                row = group._table[g]
                perm = tuple(row[alpha[t]] for t in range(n))
            else:
                perm = tuple(group.mult(g, alpha[t]) for t in range(n))
            elements = [tidentity(n)]
            power = perm
            while power != elements[0]:
                elements.append(power)
                power = tmul(power, perm)
            key = tuple(sorted(elements))
            found.setdefault(key, key)
    return sorted(found)


@dataclass
class HgsCount:
    """Hopf-Galois structure count of type g on gamma-extensions."""

    gamma: str
    g: str
    count: int
    witnesses: list
    crosscheck: Fraction
    complete: bool
    subgroup_count: int
    discrepancy: bool

    def as_dict(self):
        return {
            "gamma": self.gamma,
            "g": self.g,
            "count": self.count,
            "witnesses": [w.serialize() for w in self.witnesses],
            "crosscheck": str(self.crosscheck),
            "complete": self.complete,
            "regular_subgroups_of_type": self.subgroup_count,
            "discrepancy": self.discrepancy,
        }


def count_hgs(gamma, g, budget: int = DEFAULT_BUDGET, order_cap: int = ENUM_ORDER_CAP) -> HgsCount:
    """Count equivalence classes of regular embeddings gamma -> Hol(G) under
    conjugation by Aut(G), with one witness embedding per class."""
    gamma_name = str(gamma) if not isinstance(gamma, PermGroup) else "gamma"
    g_name = str(g) if not isinstance(g, PermGroup) else "g"
    if not isinstance(gamma, PermGroup):
        gamma = build_group(gamma)
    if not isinstance(g, PermGroup):
        g = build_group(g)
    if gamma.order() != g.order():
        raise ValueError(
            "order mismatch: |gamma| = %d, |G| = %d" % (gamma.order(), g.order())
        )
    ctx = hol_context(g)
    gamma_indexed = index_group(gamma)
    aut_g = automorphism_group(ctx.group)
    aut_g_maps = [p.images for p in aut_g.elements()]

    gamma_cyclic = _is_cyclic(gamma_indexed)
    if gamma_cyclic:
        subgroup_sets = _regular_cyclic_subgroups(ctx, aut_g_maps)
        matching = subgroup_sets
    else:
        if g.order() > order_cap:
            raise ValueError(
                "enumeration cap %d exceeded: order %d" % (order_cap, g.order())
            )
        buckets = semiregular_element_buckets(ctx, aut_g_maps)
        subgroup_sets = regular_subgroups_of_elements(buckets, ctx.n, budget=budget)
        matching = []
        for elements in subgroup_sets:
            record = RegularSubgroupRecord(elements=elements)
            if are_isomorphic(record.permutation_group(), gamma) is not None:
                matching.append(elements)

    # expand each matching subgroup into all regular embeddings gamma -> N
    gamma_gens = _greedy_gens(gamma_indexed)
    aut_gamma_maps = automorphisms(gamma_indexed)
    embeddings = set()
    for elements in matching:
        record = RegularSubgroupRecord(elements=elements)
        n_group = record.permutation_group()
        n_indexed = index_group(n_group)
        iso = are_isomorphic(gamma, n_group)
        if iso is None:
            raise AssertionError("subgroup lost its isomorphism type")
        for aut_map in aut_gamma_maps:
            fingerprint = tuple(
                n_indexed.elements[iso.mapping[aut_map[gen]]] for gen in gamma_gens
            )
            embeddings.add(fingerprint)

    # orbit count under Aut(G)-conjugation
    theta_pairs = [
        (p.images, tinv(p.images)) for p in aut_g.generators
    ]
    orbits = 0
    reps = []
    unvisited = set(embeddings)
    while unvisited:
        start = min(unvisited)
        orbits += 1
        reps.append(start)
        queue = [start]
        unvisited.discard(start)
        while queue:
            current = queue.pop()
            for theta, theta_inv in theta_pairs:
                conjugated = tuple(tmul(theta, tmul(p, theta_inv)) for p in current)
                if conjugated in unvisited:
                    unvisited.discard(conjugated)
                    queue.append(conjugated)

    f = len(matching)
    crosscheck = Fraction(len(aut_gamma_maps) * f, len(aut_g_maps))
    witnesses = []
    for rep in sorted(reps):
        images = [ctx.decode_perm(p) for p in rep]
        source = PermGroup(
            [Permutation(gamma_indexed.elements[gen]) for gen in gamma_gens],
            degree=gamma.degree,
        )
        embedding = RegularEmbedding(source, ctx, images)
        embedding.verify()
        witnesses.append(embedding)
    return HgsCount(
        gamma=gamma_name,
        g=g_name,
        count=orbits,
        witnesses=witnesses,
        crosscheck=crosscheck,
        complete=True,
        subgroup_count=f,
        discrepancy=(crosscheck != orbits),
    )


def count_crosscheck_formula(gamma, g, budget: int = DEFAULT_BUDGET) -> Fraction:
    """|Aut(gamma)| * #{regular subgroups of Hol(G) isomorphic to gamma} /
    |Aut(G)|, flagged by count_hgs when it disagrees with the orbit count."""
    return count_hgs(gamma, g, budget=budget).crosscheck


def _is_cyclic(indexed) -> bool:
    return max(indexed.element_orders()) == indexed.n


def _greedy_gens(indexed):
    chosen = []
    generated = {0}
    for i in range(1, indexed.n):
        if i in generated:
            continue
        chosen.append(i)
        generated = set(indexed.subgroup_indices(chosen))
        if len(generated) == indexed.n:
            break
    return chosen


@dataclass
class HallWitness:
    """Delta_p inside Gamma together with the Hall p'-subgroup H_p of G."""

    p: int
    delta_size: int
    expected_size: int
    is_subgroup: bool
    delta_generators: list
    hp_indices: list

    @property
    def ok(self) -> bool:
        return self.is_subgroup and self.delta_size == self.expected_size

    def as_dict(self):
        return {
            "p": self.p,
            "delta_size": self.delta_size,
            "expected_size": self.expected_size,
            "is_subgroup": self.is_subgroup,
            "delta_generators": [g.cycle_string() for g in self.delta_generators],
            "hp_size": len(self.hp_indices),
        }


def delta_p(embedding: RegularEmbedding, p: int) -> HallWitness:
    """Delta_p = {gamma : beta(gamma) . e_G in H_p} for nilpotent G, where H_p
    is the set of elements of G of order prime to p."""
    ctx = embedding.ctx
    g_source = ctx.group.source
    if not g_source.is_nilpotent():
        raise ValueError("delta_p requires a nilpotent G")
    n = ctx.n
    expected = n
    while expected % p == 0:
        expected //= p
    orders = ctx.group.element_orders()
    hp = {i for i in range(n) if orders[i] % p}
    beta = embedding.full_map()
    delta = {
        gamma_perm
        for gamma_perm, image in beta.items()
        if ctx.act(image, 0) in hp
    }
    is_subgroup = all(tmul(a, b) in delta for a in delta for b in delta)
    non_identity = [d for d in sorted(delta) if d != tidentity(len(d))]
    gens = [Permutation(d) for d in non_identity]
    if gens:
        reduced = []
        current = None
        for candidate in gens:
            if current is not None and candidate in current:
                continue
            reduced.append(candidate)
            current = PermGroup(reduced, degree=candidate.degree)
            if current.order() == len(delta):
                break
        gens = reduced
    return HallWitness(
        p=p,
        delta_size=len(delta),
        expected_size=expected,
        is_subgroup=is_subgroup,
        delta_generators=gens,
        hp_indices=sorted(hp),
    )


@dataclass
class ComplementaryPair:
    """Subgroups H, J of G with |H||J| = |G| and trivial intersection."""

    group: PermGroup
    h: PermGroup
    j: PermGroup

    def verify(self) -> bool:
        if self.h.order() * self.j.order() != self.group.order():
            return False
        for element in self.j.elements():
            if not element.is_identity() and element in self.h:
                return False
        return all(g in self.group for g in self.h.generators) and all(
            g in self.group for g in self.j.generators
        )


def find_complement(
    group: PermGroup,
    h,
    budget: int = DEFAULT_BUDGET,
    group_cap: int = 10**4,
    index_cap: int = ENUM_ORDER_CAP,
):
    """A subgroup J complementary to H in G, or None after exhaustive search.

    H may be a subgroup or a point (its stabilizer is used).  J is found as a
    regular subgroup of the action of G on the cosets of H; the search is
    exhaustive, so None is a proof of nonexistence (at these caps).
    """
    if isinstance(h, int):
        h = group.point_stabilizer(h)
    order = group.order()
    if order > group_cap:
        raise ValueError("group cap %d exceeded: order %d" % (group_cap, order))
    if order % h.order():
        raise ValueError("|H| does not divide |G|")
    m = order // h.order()
    if m > index_cap:
        raise ValueError("index cap %d exceeded: index %d" % (index_cap, m))

    coset_perm_of, kernel_free = _coset_action(group, h, m)
    if not kernel_free:
        raise ValueError("coset action is not faithful; complement search unsupported")

    buckets = {x: [] for x in range(1, m)}
    pullback = {}
    for g_elem, image in coset_perm_of:
        pullback.setdefault(image, g_elem)
        if image[0] != 0 and is_uniform_cycle_tuple(image):
            buckets[image[0]].append(image)
    for x in buckets:
        buckets[x].sort()
    subgroups = regular_subgroups_of_elements(buckets, m, budget=budget)
    if not subgroups:
        return None
    elements = subgroups[0]
    j_gens = [Permutation(pullback[p]) for p in elements if p != tidentity(m)]
    j = PermGroup(_reduce(j_gens, m), degree=group.degree)
    if j.order() != m:
        raise AssertionError("pullback complement has wrong order")
    return j


def _reduce(gens, target_order):
    chosen = []
    current = None
    for g in gens:
        if current is not None and g in current:
            continue
        chosen.append(g)
        current = PermGroup(chosen, degree=g.degree)
        if current.order() == target_order:
            break
    return chosen


def _coset_action(group: PermGroup, h: PermGroup, m: int):
    """Pairs (element images, coset permutation) for all of G acting on the
    right cosets of H, plus a faithfulness flag.

    Cosets are numbered by BFS from H itself over the group generators.
    """
    gens = [g.images for g in group.generators]
    identity = tidentity(group.degree)
    reps = [identity]
    rep_inv = [identity]

    def coset_index(x):
        for i, r_inv in enumerate(rep_inv):
            if tmul(r_inv, x) in h:
                return i
        return None

    queue = [identity]
    while queue:
        rep = queue.pop(0)
        for g in gens:
            product = tmul(g, rep)
            if coset_index(product) is None:
                reps.append(product)
                rep_inv.append(tinv(product))
                queue.append(product)
    if len(reps) != m:
        raise AssertionError("found %d cosets, expected %d" % (len(reps), m))

    elements = group.elements(cap=10**4)
    pairs = []
    images_seen = set()
    for element in elements:
        image = tuple(coset_index(tmul(element.images, r)) for r in reps)
        pairs.append((element.images, image))
        images_seen.add(image)
    return pairs, len(images_seen) == len(elements)
