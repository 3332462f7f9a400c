import itertools

import pytest

import semiring_lab as sl

GOLDEN3_TEXT = """3
a b c
a b c
b b b
c b c

a a a
b b b
a b c
"""


@pytest.fixture(scope="session")
def golden3():
    """The 3-element idempotent semiring printed in the source literature
    (add rows a,b,c then mul rows, row = left operand)."""
    return sl.parse_semiring_text(GOLDEN3_TEXT)


@pytest.fixture(scope="session")
def order1():
    return sl.SemiringTable.from_rows([[0]], [[0]])


@pytest.fixture(scope="session")
def dl2():
    """Two-element distributive lattice: + = join, . = meet on 0 < 1."""
    return sl.SemiringTable.from_rows([[0, 1], [1, 1]], [[0, 0], [0, 1]])


@pytest.fixture(scope="session")
def chain3():
    """Three-element chain lattice: + = max, . = min."""
    n = 3
    return sl.SemiringTable.from_rows(
        [[max(i, j) for j in range(n)] for i in range(n)],
        [[min(i, j) for j in range(n)] for i in range(n)])


@pytest.fixture(scope="session")
def lz2():
    """Left-zero multiplication over the 2-chain join."""
    return sl.SemiringTable.from_rows([[0, 1], [1, 1]], [[0, 0], [1, 1]])


@pytest.fixture(scope="session")
def rz2():
    """Right-zero multiplication over the 2-chain join."""
    return sl.SemiringTable.from_rows([[0, 1], [1, 1]], [[0, 1], [0, 1]])


@pytest.fixture(scope="session")
def labeled_by_order():
    """All labeled idempotent semirings of orders 1..3."""
    return {n: sl.all_idempotent_semirings(n) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def small_semirings(labeled_by_order):
    return [t for ts in labeled_by_order.values() for t in ts]


@pytest.fixture(scope="session")
def iso4():
    """Isomorphism-class representatives at order 4."""
    return sl.all_idempotent_semirings(4, up_to_iso=True)


def set_partitions(n):
    """All partitions of range(n) as canonical label tuples (oracle)."""
    if n == 0:
        yield ()
        return
    for labels in itertools.product(*[range(i + 1) for i in range(n)]):
        # restricted growth strings are exactly the canonical labelings
        if all(labels[i] <= max(labels[:i], default=-1) + 1 for i in range(n)):
            yield labels
