"""Isomorphism testing and automorphism groups by generator-image backtracking.

Both searches run on Cayley-indexed groups.  A fixed small generating sequence
of the source is found greedily; candidate images in the target are filtered
by element order and conjugacy class size, then each complete tuple of images
is checked by filling the image array along a BFS spanning tree of the source
Cayley graph and verifying every non-tree edge.  That edge check is exact: a
map respecting all Cayley-graph edges is a homomorphism.
"""

from __future__ import annotations

from .cayley import CayleyIndexedGroup, index_group
from .perm import PermGroup, Permutation
from .structure import conjugacy_classes

ISO_CAP = 10**4
AUT_CAP = 2000


def _greedy_generating_sequence(group) -> list:
    chosen = []
    generated = {0}
    for i in range(1, group.n):
        if i in generated:
            continue
        chosen.append(i)
        generated = set(group.subgroup_indices(chosen))
        if len(generated) == group.n:
            break
    return chosen


def _bfs_edges(group, gens):
    """Spanning-tree fill order and the full edge list of the Cayley graph on
    the chosen generators.

    Returns (tree, edges): tree is a list of (element, parent, gen) triples in
    BFS order covering all elements; edges lists every (element, gen, product).
    """
    n = group.n
    tree = []
    seen = [False] * n
    seen[0] = True
    queue = [0]
    order = [0]
    parent_gen = {0: None}
    while queue:
        current = queue.pop(0)
        for g in gens:
            product = group.mult(current, g)
            if not seen[product]:
                seen[product] = True
                tree.append((product, current, g))
                queue.append(product)
                order.append(product)
    edges = [(x, g) for x in order for g in gens]
    return tree, edges


class _CandidateData:
    """Prepared target-side data for a backtracking run."""

    def __init__(self, group):
        self.group = group
        self.classes = conjugacy_classes(group)
        self.class_size = {}
        for cls in self.classes:
            for x in cls:
                self.class_size[x] = len(cls)
        self.orders = group.element_orders()

    def invariant(self, x):
        return (self.orders[x], self.class_size[x])

    def candidates(self, order, size):
        return [x for x in range(self.group.n) if self.orders[x] == order and self.class_size[x] == size]


def _image_map(source, target, gens, images, tree, edges):
    """Fill the image array along the spanning tree and verify all edges;
    returns the full index map or None."""
    n = source.n
    img = [-1] * n
    img[0] = 0
    assignment = dict(zip(gens, images))
    for element, parent, gen in tree:
        img[element] = target.mult(img[parent], assignment[gen])
    # bijectivity
    if len(set(img)) != n:
        return None
    # every Cayley edge must commute with the map
    for element, gen in edges:
        if img[source.mult(element, gen)] != target.mult(img[element], assignment[gen]):
            return None
    return img


def _word_relations(group, gens, max_len=3):
    """Short words in the generators with their element orders, used as cheap
    necessary conditions on candidate image tuples."""
    words = []
    for length in (2, max_len):
        for word in _words_over(len(gens), length):
            element = 0
            for k in word:
                element = group.mult(element, gens[k])
            words.append((word, group.element_order(element)))
    return words


def _words_over(ngens, length):
    if length == 0:
        yield ()
        return
    for rest in _words_over(ngens, length - 1):
        for k in range(ngens):
            yield rest + (k,)


def _search(source, target, collect_all):
    """Backtracking over generator images; yields full image maps."""
    gens = _greedy_generating_sequence(source)
    if not gens:
        if target.n == 1:
            yield [0]
        return
    tree, edges = _bfs_edges(source, gens)
    source_data = _CandidateData(source)
    target_data = _CandidateData(target)
    candidate_lists = []
    for g in gens:
        order, size = source_data.invariant(g)
        candidates = target_data.candidates(order, size)
        if not candidates:
            return
        candidate_lists.append(candidates)

    partial_orders = _partial_subgroup_orders(source, gens)
    relations = _word_relations(source, gens)
    target_orders = target.element_orders()

    def relations_hold(chosen):
        level = len(chosen)
        for word, order in relations:
            if any(k >= level for k in word):
                continue
            element = 0
            for k in word:
                element = target.mult(element, chosen[k])
            if target_orders[element] != order:
                return False
        return True

    def extend(level, chosen):
        if level == len(gens):
            img = _image_map(source, target, gens, chosen, tree, edges)
            if img is not None:
                yield img
            return
        last = level == len(gens) - 1
        for candidate in candidate_lists[level]:
            chosen.append(candidate)
            # word orders are a cheap necessary filter; the subgroup-order
            # check is the strong prune for intermediate levels (at the last
            # level the bijectivity check in _image_map subsumes it)
            if relations_hold(chosen) and (
                last or len(target.subgroup_indices(chosen)) == partial_orders[level]
            ):
                yield from extend(level + 1, chosen)
            chosen.pop()

    yield from extend(0, [])


def _partial_subgroup_orders(group, gens):
    return [len(group.subgroup_indices(gens[: i + 1])) for i in range(len(gens))]


class Isomorphism:
    """An isomorphism between two indexed groups, as an index map."""

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = list(mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def verify(self) -> bool:
        src, dst, img = self.source, self.target, self.mapping
        if sorted(img) != list(range(src.n)):
            return False
        return all(
            img[src.mult(a, b)] == dst.mult(img[a], img[b])
            for a in range(src.n)
            for b in range(src.n)
        )

    def as_json(self):
        return list(self.mapping)


def _prescreen(g, h) -> bool:
    if g.n != h.n:
        return False
    if sorted(g.element_orders()) != sorted(h.element_orders()):
        return False
    g_classes = sorted(len(c) for c in conjugacy_classes(g))
    h_classes = sorted(len(c) for c in conjugacy_classes(h))
    return g_classes == h_classes


def are_isomorphic(g: PermGroup, h: PermGroup, cap: int = ISO_CAP):
    """An Isomorphism g -> h, or None (definitive at these sizes)."""
    if g.order() != h.order():
        return None
    if g.order() > cap:
        raise ValueError("isomorphism cap %d exceeded: order %d" % (cap, g.order()))
    gi = index_group(g)
    hi = index_group(h)
    if not _prescreen(gi, hi):
        return None
    for mapping in _search(gi, hi, collect_all=False):
        return Isomorphism(gi, hi, mapping)
    return None


def automorphisms(indexed: CayleyIndexedGroup, cap: int = AUT_CAP):
    """All automorphisms of an indexed group, as index maps (sorted)."""
    if indexed.n > cap:
        raise ValueError("automorphism cap %d exceeded: order %d" % (cap, indexed.n))
    maps = sorted(tuple(m) for m in _search(indexed, indexed, collect_all=True))
    return [list(m) for m in maps]


def automorphism_group(g: PermGroup, cap: int = AUT_CAP) -> PermGroup:
    """Aut(G) as a permutation group on the element indices of index_group(G)."""
    indexed = g if isinstance(g, CayleyIndexedGroup) else index_group(g)
    maps = automorphisms(indexed, cap=cap)
    perms = [Permutation(m) for m in maps]
    non_trivial = [p for p in perms if not p.is_identity()]
    if not non_trivial:
        return PermGroup.trivial(indexed.n)
    group = PermGroup(_reduce_generators(non_trivial, len(maps)), degree=indexed.n)
    if group.order() != len(maps):
        raise AssertionError("automorphism generators lost elements")
    return group


def _reduce_generators(perms, target_order):
    """Greedy small generating subset of an explicit element list."""
    chosen = []
    current = None
    for p in perms:
        if current is not None and p in current:
            continue
        chosen.append(p)
        current = PermGroup(chosen, degree=p.degree)
        if current.order() == target_order:
            break
    return chosen


def inner_automorphism_group(indexed: CayleyIndexedGroup) -> PermGroup:
    """Inn(G) on element indices (conjugation by each generator)."""
    gens = []
    for g in indexed.generator_indices():
        images = [indexed.conj(g, x) for x in range(indexed.n)]
        perm = Permutation(images)
        if not perm.is_identity():
            gens.append(perm)
    if not gens:
        return PermGroup.trivial(indexed.n)
    return PermGroup(gens, degree=indexed.n)
