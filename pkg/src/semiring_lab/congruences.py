"""Congruences and the least distributive lattice congruence.

Three independent routes to the least distributive lattice congruence are
implemented: the meet over all congruences with distributive-lattice
quotient, the congruence closure of the relation sigma, and the single
existential-witness relation sigma_star.  They coincide on every
idempotent semiring; the coincidence is a proved theorem, so the library
treats any disagreement as an implementation bug.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Tuple, Union

from .core import (InternalConsistencyError, PreconditionError,
                   ResourceBoundError, SemiringTable)
from .relations import BinRelation, Partition

DEFAULT_ORDER_BOUND = 8


def is_congruence(t: SemiringTable, p: Partition) -> bool:
    """Compatibility of p with both operations, by single-sided substitution."""
    if p.order != t.order:
        raise PreconditionError("partition order %d != semiring order %d"
                                % (p.order, t.order))
    n = t.order
    blocks = p.blocks()
    for block in blocks:
        a = block[0]
        for b in block[1:]:
            for c in range(n):
                if not (p.related(t.add[a][c], t.add[b][c])
                        and p.related(t.add[c][a], t.add[c][b])
                        and p.related(t.mul[a][c], t.mul[b][c])
                        and p.related(t.mul[c][a], t.mul[c][b])):
                    return False
    return True


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def congruence_closure(t: SemiringTable,
                       seed: Union[BinRelation, Iterable[Tuple[int, int]]]
                       ) -> Partition:
    """Least congruence of t containing the seed relation.

    Union-find plus a work queue of newly merged pairs: each merge (a, b)
    enqueues the substitution consequences (a+c, b+c), (c+a, c+b),
    (ac, bc), (ca, cb) for every c.
    """
    n = t.order
    pairs = seed.pairs if isinstance(seed, BinRelation) else seed
    uf = _UnionFind(n)
    queue = deque()
    for a, b in pairs:
        if uf.union(a, b):
            queue.append((a, b))
    while queue:
        a, b = queue.popleft()
        for c in range(n):
            for x, y in ((t.add[a][c], t.add[b][c]),
                         (t.add[c][a], t.add[c][b]),
                         (t.mul[a][c], t.mul[b][c]),
                         (t.mul[c][a], t.mul[c][b])):
                if uf.union(x, y):
                    queue.append((x, y))
    return Partition([uf.find(x) for x in range(n)])


@lru_cache(maxsize=None)
def sigma(t: SemiringTable) -> BinRelation:
    """a sigma b iff aba = aba+a+aba and bab = bab+b+bab.

    Reflexive and symmetric by construction; transitivity is NOT
    guaranteed (and genuinely fails on some idempotent semirings).
    """
    def absorbed(a: int, b: int) -> bool:
        aba = t.mul[t.mul[a][b]][a]
        return t.add[t.add[aba][a]][aba] == aba

    return BinRelation.from_predicate(
        t.order, lambda a, b: absorbed(a, b) and absorbed(b, a))


@lru_cache(maxsize=None)
def sigma_star(t: SemiringTable) -> BinRelation:
    """a sigma_star b iff some x has axbxa, bxaxb absorbed as in sigma.

    The witness search is exhaustive over x in S.  The result must equal
    the transitive closure of sigma; that equality is asserted here and a
    mismatch raises InternalConsistencyError.
    """
    n = t.order

    def absorbed_via(a: int, b: int, x: int) -> bool:
        w = t.prod_of((a, x, b, x, a))
        return t.add[t.add[w][a]][w] == w

    rel = BinRelation.from_predicate(
        n, lambda a, b: any(absorbed_via(a, b, x) and absorbed_via(b, a, x)
                            for x in range(n)))
    if rel != sigma(t).transitive_closure():
        raise InternalConsistencyError(
            "sigma_star differs from the transitive closure of sigma")
    return rel


@dataclass(frozen=True)
class CongruenceSet:
    """All congruences of one semiring, canonically sorted, with a flag per
    congruence telling whether its quotient is a distributive lattice."""

    partitions: Tuple[Partition, ...]
    dl_flags: Tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.partitions)

    def distributive_lattice_congruences(self) -> Tuple[Partition, ...]:
        return tuple(p for p, f in zip(self.partitions, self.dl_flags) if f)


def principal_congruence(t: SemiringTable, a: int, b: int) -> Partition:
    return congruence_closure(t, [(a, b)])


@lru_cache(maxsize=None)
def all_congruences(t: SemiringTable,
                    order_bound: int = DEFAULT_ORDER_BOUND) -> CongruenceSet:
    """The full congruence lattice, by closing the principal congruences
    under pairwise join.

    Joins of congruences are taken as partition joins: the equivalence
    join of two congruences is again a congruence.
    """
    n = t.order
    if n > order_bound:
        raise ResourceBoundError(
            "order %d exceeds congruence-lattice bound %d" % (n, order_bound))
    found = {Partition.equality(n)}
    for a in range(n):
        for b in range(a + 1, n):
            found.add(principal_congruence(t, a, b))
    frontier = list(found)
    while frontier:
        fresh = []
        for p in frontier:
            for q in list(found):
                j = p.join(q)
                if j not in found:
                    found.add(j)
                    fresh.append(j)
        frontier = fresh
    parts = tuple(sorted(found, key=lambda p: p.labels))
    from .structure import is_distributive_lattice, quotient
    flags = tuple(is_distributive_lattice(quotient(t, p)[0]) for p in parts)
    return CongruenceSet(parts, flags)


LDC_METHODS = ("meet_oracle", "sigma_closure", "sigma_star")


def least_dl_congruence(t: SemiringTable, method: str = "sigma_closure"
                        ) -> Partition:
    """The least congruence whose quotient is a distributive lattice.

    meet_oracle:    partition meet of every distributive-lattice congruence.
    sigma_closure:  congruence closure of sigma.
    sigma_star:     the partition induced by sigma_star directly; raises
                    InternalConsistencyError if sigma_star is not an
                    equivalence (it provably is).
    """
    if method == "meet_oracle":
        dl = all_congruences(t).distributive_lattice_congruences()
        # the universal congruence always qualifies, so dl is non-empty
        acc = dl[0]
        for p in dl[1:]:
            acc = acc.meet(p)
        return acc
    if method == "sigma_closure":
        return congruence_closure(t, sigma(t))
    if method == "sigma_star":
        rel = sigma_star(t)
        if not rel.is_equivalence():
            raise InternalConsistencyError("sigma_star is not an equivalence")
        return rel.to_partition()
    raise PreconditionError("unknown method %r; expected one of %r"
                            % (method, LDC_METHODS))


@lru_cache(maxsize=None)
def eta(t: SemiringTable) -> Partition:
    """The least distributive lattice congruence, via the sigma closure."""
    return least_dl_congruence(t, "sigma_closure")
