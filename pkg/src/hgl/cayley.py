"""Canonical element indexing for finite groups.

A CayleyIndexedGroup assigns indices 0..n-1 to the elements of a permutation
group (identity = 0) by a breadth-first walk from the identity over the sorted
generators, so the numbering is reproducible.  Multiplication is served from a
dense table for small groups and computed on demand from the underlying
permutations for large ones, which keeps groups like A8 (order 20160) usable
without an n x n table in memory.
"""

from __future__ import annotations

from math import lcm

from .perm import PermGroup, Permutation, tidentity, tinv, tmul

DENSE_TABLE_MAX = 1024
INDEX_CAP = 10**5


class CayleyIndexedGroup:
    """A finite group with elements canonically indexed 0..n-1."""

    def __init__(self, source: PermGroup, cap: int = INDEX_CAP):
        order = source.order()
        if order > cap:
            raise ValueError("indexing cap %d exceeded: order %d" % (cap, order))
        self.source = source
        self.elements = [g.images for g in source.elements(cap=cap)]
        self.n = len(self.elements)
        self.index = {p: i for i, p in enumerate(self.elements)}
        self.inverse = [self.index[tinv(p)] for p in self.elements]
        self._orders = None
        self._table = None
        if self.n <= DENSE_TABLE_MAX:
            self._table = [
                [self.index[tmul(p, q)] for q in self.elements] for p in self.elements
            ]

    def mult(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self.index[tmul(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self.inverse[i]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mult(self.mult(g, x), self.inverse[g])

    def element_order(self, i: int) -> int:
        return self.element_orders()[i]

    def element_orders(self):
        if self._orders is None:
            orders = []
            for p in self.elements:
                seen = [False] * len(p)
                result = 1
                for start in range(len(p)):
                    if seen[start]:
                        continue
                    length = 1
                    seen[start] = True
                    point = p[start]
                    while point != start:
                        seen[point] = True
                        length += 1
                        point = p[point]
                    result = lcm(result, length)
                orders.append(result)
            self._orders = orders
        return self._orders

    def left_translation(self, g: int):
        """lambda(g) as a tuple on element indices: t -> g*t."""
        if self._table is not None:
            return tuple(self._table[g])
        pg = self.elements[g]
        index = self.index
        return tuple(index[tmul(pg, q)] for q in self.elements)

    def subgroup_indices(self, gens):
        """Closure of a set of element indices, as a sorted list."""
        seen = {0}
        out = [0]
        queue = [0]
        gens = list(gens)
        while queue:
            current = queue.pop()
            for g in gens:
                product = self.mult(current, g)
                if product not in seen:
                    seen.add(product)
                    out.append(product)
                    queue.append(product)
        return sorted(seen)

    def generator_indices(self):
        return [self.index[g.images] for g in self.source.generators]

    def __len__(self):
        return self.n

    def __repr__(self):
        return "CayleyIndexedGroup(order=%d, degree=%d)" % (self.n, self.source.degree)


def index_group(group: PermGroup, cap: int = INDEX_CAP) -> CayleyIndexedGroup:
    return CayleyIndexedGroup(group, cap=cap)


class TableGroup:
    """A group given by a raw multiplication table (identity must be index 0).

    Used for quotients and subgroups extracted at the Cayley level, where no
    natural permutation representation is at hand.  The interface mirrors the
    parts of CayleyIndexedGroup that structural computations need.
    """

    def __init__(self, table):
        self.n = len(table)
        self._table = [list(row) for row in table]
        for i in range(self.n):
            if self._table[0][i] != i or self._table[i][0] != i:
                raise ValueError("index 0 is not a two-sided identity")
        self.inverse = [0] * self.n
        for i in range(self.n):
            row = self._table[i]
            for j in range(self.n):
                if row[j] == 0:
                    self.inverse[i] = j
                    break
        self._orders = None

    def mult(self, i, j):
        return self._table[i][j]

    def inv(self, i):
        return self.inverse[i]

    def conj(self, g, x):
        return self.mult(self.mult(g, x), self.inverse[g])

    def element_orders(self):
        if self._orders is None:
            orders = [1] * self.n
            for i in range(self.n):
                k, power = 1, i
                while power != 0:
                    power = self.mult(power, i)
                    k += 1
                orders[i] = k
            self._orders = orders
        return self._orders

    def element_order(self, i):
        return self.element_orders()[i]

    def subgroup_indices(self, gens):
        seen = {0}
        queue = [0]
        gens = list(gens)
        while queue:
            current = queue.pop()
            for g in gens:
                product = self.mult(current, g)
                if product not in seen:
                    seen.add(product)
                    queue.append(product)
        return sorted(seen)

    def __len__(self):
        return self.n


def regular_permutation_group(group) -> PermGroup:
    """The left regular representation of an indexed group, on 0..n-1."""
    gens = []
    identity = tidentity(group.n)
    for g in _small_generating_set(group):
        images = tuple(group.mult(g, t) for t in range(group.n))
        if images != identity:
            gens.append(Permutation(images))
    if not gens:
        return PermGroup.trivial(max(group.n, 1))
    return PermGroup(gens, degree=group.n)


def _small_generating_set(group):
    """Greedy generating set: scan indices, keep those that enlarge the
    generated subgroup."""
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
