"""Quotients, Malcev products, spined products and isomorphism testing."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union

from .core import (InternalConsistencyError, PreconditionError, SemiringTable,
                   holds, validate_semiring)
from .relations import Partition, green_mult


# ---------------------------------------------------------------------------
# Class expressions: named varieties and Malcev products

@dataclass(frozen=True)
class Named:
    variety: "VarietySpec"  # noqa: F821 (defined in varieties)


@dataclass(frozen=True)
class Malcev:
    left: "ClassExpr"
    right: "ClassExpr"


ClassExpr = Union[Named, Malcev]


# ---------------------------------------------------------------------------
# Quotients and distributive lattices

@lru_cache(maxsize=None)
def _quotient_cached(t: SemiringTable, p: Partition
                     ) -> Tuple[SemiringTable, Tuple[int, ...]]:
    from .congruences import is_congruence
    if not is_congruence(t, p):
        raise PreconditionError("partition is not a congruence")
    blocks = p.blocks()
    k = len(blocks)
    reps = [block[0] for block in blocks]
    lab = p.labels
    add = [[lab[t.add[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    mul = [[lab[t.mul[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    # well-definedness: representatives must not matter
    for a in range(t.order):
        for b in range(t.order):
            if (add[lab[a]][lab[b]] != lab[t.add[a][b]]
                    or mul[lab[a]][lab[b]] != lab[t.mul[a][b]]):
                raise InternalConsistencyError(
                    "quotient not well-defined despite congruence check")
    names = tuple("|".join(t.names[x] for x in block) for block in blocks)
    q = SemiringTable.from_rows(add, mul, names)
    if not validate_semiring(q).is_semiring:
        raise InternalConsistencyError("quotient failed semiring validation")
    return q, tuple(lab)


def quotient(t: SemiringTable, p: Partition
             ) -> Tuple[SemiringTable, Tuple[int, ...]]:
    """Quotient semiring and the projection map element -> block index.

    Block representatives are the least element of each block; the induced
    tables are re-checked for well-definedness and re-validated.
    """
    return _quotient_cached(t, p)


def is_distributive_lattice(t: SemiringTable) -> bool:
    """Both operations commutative plus absorption x+xy = x.

    The dual absorption x(x+y) = x then follows from distributivity and is
    asserted as a sanity check.
    """
    ok = (holds(t, "x+y = y+x") and holds(t, "xy = yx")
          and holds(t, "x+xy = x"))
    if ok and not holds(t, "x(x+y) = x"):
        raise InternalConsistencyError(
            "absorption x+xy = x holds but dual absorption fails")
    return ok


# ---------------------------------------------------------------------------
# Subalgebras and Malcev products

def _subalgebra(t: SemiringTable, elems: Sequence[int]) -> Optional[SemiringTable]:
    """Restrict t to elems, or None if elems is not closed under + and .."""
    index = {x: i for i, x in enumerate(sorted(elems))}
    order = sorted(elems)
    add, mul = [], []
    for a in order:
        add_row, mul_row = [], []
        for b in order:
            s, m = t.add[a][b], t.mul[a][b]
            if s not in index or m not in index:
                return None
            add_row.append(index[s])
            mul_row.append(index[m])
        add.append(add_row)
        mul.append(mul_row)
    return SemiringTable.from_rows(add, mul, [t.names[x] for x in order])


def malcev_membership(t: SemiringTable, expr: ClassExpr,
                      order_bound: Optional[int] = None
                      ) -> Tuple[bool, Optional[Partition]]:
    """Membership of t in a class expression, with a witness congruence.

    For Malcev(V, W): search all congruences rho of t in canonical order
    for one whose quotient lies in W and whose classes are all closed
    under both operations and lie in V (both checks recursive).  A class
    not closed under + or . disqualifies its congruence.  Returns the
    first witness in canonical congruence order.
    """
    from .congruences import DEFAULT_ORDER_BOUND, all_congruences
    from .varieties import variety_membership
    if isinstance(expr, Named):
        return variety_membership(t, expr.variety), None
    bound = DEFAULT_ORDER_BOUND if order_bound is None else order_bound
    for rho in all_congruences(t, bound).partitions:
        q, _ = quotient(t, rho)
        if not malcev_membership(q, expr.right, order_bound)[0]:
            continue
        ok = True
        for block in rho.blocks():
            sub = _subalgebra(t, block)
            if sub is None or not malcev_membership(sub, expr.left, order_bound)[0]:
                ok = False
                break
        if ok:
            return True, rho
    return False, None


# ---------------------------------------------------------------------------
# Isomorphism and spined products

def _row_signature(t: SemiringTable, i: int) -> Tuple:
    # permutation-invariant per-element fingerprint, used only to prune
    add_row = t.add[i]
    mul_row = t.mul[i]
    add_col = tuple(t.add[j][i] for j in range(t.order))
    mul_col = tuple(t.mul[j][i] for j in range(t.order))
    def stats(seq):
        return (seq.count(i), len(set(seq)))
    return stats(add_row) + stats(mul_row) + stats(add_col) + stats(mul_col)


def is_isomorphic(s: SemiringTable, t: SemiringTable
                  ) -> Optional[Tuple[int, ...]]:
    """A bijection i -> perm[i] preserving both operations, or None.

    Deterministic: the first preserving permutation in lexicographic order
    is returned.  Per-element fingerprints give a cheap early rejection.
    """
    if s.order != t.order:
        return None
    n = s.order
    if sorted(_row_signature(s, i) for i in range(n)) != \
            sorted(_row_signature(t, i) for i in range(n)):
        return None
    for perm in itertools.permutations(range(n)):
        if all(t.add[perm[i]][perm[j]] == perm[s.add[i][j]]
               and t.mul[perm[i]][perm[j]] == perm[s.mul[i][j]]
               for i in range(n) for j in range(n)):
            return perm
    return None


def spined_product(s1: SemiringTable, s2: SemiringTable, d: SemiringTable,
                   phi1: Sequence[int], phi2: Sequence[int]
                   ) -> Tuple[SemiringTable, Tuple[Tuple[int, int], ...]]:
    """Fiber product of s1 and s2 over the spine d.

    phi1 and phi2 must be surjective homomorphisms onto d (verified).
    Returns the product table and its carrier as (s1-index, s2-index)
    pairs in lexicographic order.
    """
    for s, phi, label in ((s1, phi1, "phi1"), (s2, phi2, "phi2")):
        if len(phi) != s.order or any(not 0 <= v < d.order for v in phi):
            raise PreconditionError("%s is not a map onto d's carrier" % label)
        if set(phi) != set(range(d.order)):
            raise PreconditionError("%s is not surjective" % label)
        for a in range(s.order):
            for b in range(s.order):
                if (phi[s.add[a][b]] != d.add[phi[a]][phi[b]]
                        or phi[s.mul[a][b]] != d.mul[phi[a]][phi[b]]):
                    raise PreconditionError("%s is not a homomorphism" % label)
    elems = [(i, j) for i in range(s1.order) for j in range(s2.order)
             if phi1[i] == phi2[j]]
    index = {e: k for k, e in enumerate(elems)}
    add = [[index[(s1.add[a1][b1], s2.add[a2][b2])] for (b1, b2) in elems]
           for (a1, a2) in elems]
    mul = [[index[(s1.mul[a1][b1], s2.mul[a2][b2])] for (b1, b2) in elems]
           for (a1, a2) in elems]
    names = ["(%s,%s)" % (s1.names[i], s2.names[j]) for i, j in elems]
    prod = SemiringTable.from_rows(add, mul, names)
    if not validate_semiring(prod).is_idempotent_semiring:
        raise InternalConsistencyError("spined product failed validation")
    return prod, tuple(elems)


@dataclass(frozen=True)
class SpinedDecomposition:
    """S embedded in the fiber product of S/L. and S/R. over S/D.."""

    s1: SemiringTable          # S / L-dot, lies in R-dot
    s2: SemiringTable          # S / R-dot, lies in L-dot
    d: SemiringTable           # S / D-dot, a distributive lattice
    phi1: Tuple[int, ...]      # S1 -> D
    phi2: Tuple[int, ...]      # S2 -> D
    theta: Tuple[Tuple[int, int], ...]  # a -> (L-class, R-class)


def _attempt_spined_decomposition(t: SemiringTable
                                  ) -> Tuple[bool, Optional[SpinedDecomposition], str]:
    """Run the full decomposition machinery without assuming membership.

    Returns (ok, decomposition, reason).  Used both by spined_decompose
    (where a failure on a member contradicts the theorem) and by the
    corollary check (where failure on a non-member is expected).
    """
    from .congruences import eta, is_congruence
    from .varieties import CATALOG, variety_membership
    l_dot, r_dot, d_dot = green_mult(t)
    for p, name in ((l_dot, "L-dot"), (r_dot, "R-dot"), (d_dot, "D-dot")):
        if not is_congruence(t, p):
            return False, None, "%s is not a congruence" % name
    s1, proj1 = quotient(t, l_dot)
    s2, proj2 = quotient(t, r_dot)
    d, projd = quotient(t, d_dot)
    if not variety_membership(s1, CATALOG["R_dot"]):
        return False, None, "S/L-dot is not in R_dot"
    if not variety_membership(s2, CATALOG["L_dot"]):
        return False, None, "S/R-dot is not in L_dot"
    if not is_distributive_lattice(d):
        return False, None, "S/D-dot is not a distributive lattice"
    if d_dot != eta(t):
        return False, None, "D-dot differs from the least d.l. congruence"
    if d_dot.as_relation() != l_dot.as_relation().compose(r_dot.as_relation()):
        return False, None, "D-dot is not the composition of L-dot and R-dot"
    # phi maps: L-class of a -> D-class of a (well-defined since L-dot
    # refines D-dot); likewise for R-classes
    phi1 = [0] * s1.order
    phi2 = [0] * s2.order
    for a in range(t.order):
        phi1[proj1[a]] = projd[a]
        phi2[proj2[a]] = projd[a]
    theta = tuple((proj1[a], proj2[a]) for a in range(t.order))
    if len(set(theta)) != t.order:
        return False, None, "theta is not injective"
    fiber = {(i, j) for i in range(s1.order) for j in range(s2.order)
             if phi1[i] == phi2[j]}
    if set(theta) != fiber:
        return False, None, "theta's image is not the whole fiber product"
    return True, SpinedDecomposition(s1, s2, d, tuple(phi1), tuple(phi2), theta), ""


def spined_decompose(t: SemiringTable) -> SpinedDecomposition:
    """Decompose a member of D_dot as a spined product of S/L. and S/R..

    Non-members are refused with a PreconditionError naming the failing
    identity witness.  Any post-membership failure contradicts a proved
    theorem and raises InternalConsistencyError.
    """
    from .core import parse_identity, satisfies_identity
    ok, witness = satisfies_identity(t, parse_identity("x = xyx+x+xyx"))
    if not ok:
        raise PreconditionError(
            "not in D_dot: identity x = xyx+x+xyx fails at %r" % (witness,))
    success, decomp, reason = _attempt_spined_decomposition(t)
    if not success:
        raise InternalConsistencyError(
            "spined decomposition failed on a D_dot member: %s" % reason)
    assert decomp is not None
    return decomp


def reconstruct(decomp: SpinedDecomposition
                ) -> Tuple[SemiringTable, Tuple[Tuple[int, int], ...]]:
    """Rebuild the spined product a decomposition embeds into."""
    return spined_product(decomp.s1, decomp.s2, decomp.d,
                          decomp.phi1, decomp.phi2)
