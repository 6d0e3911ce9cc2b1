import pytest

from canalcount.enumeration import build_table
from canalcount.truthtable import TruthTable


@pytest.fixture(scope="session")
def table12():
    return build_table(12)


@pytest.fixture(scope="session")
def table4(table12):
    # a full table already covers small n; reuse to keep the suite fast
    return table12


def function_of(n, expr):
    """Build a TruthTable from a python callable on bit tuples (test helper)."""
    value = 0
    for idx in range(1 << n):
        xs = tuple((idx >> j) & 1 for j in range(n))
        value |= (1 if expr(*xs) else 0) << idx
    return TruthTable(n, value)


@pytest.fixture(scope="session")
def paper_example():
    # x1 OR (NOT x2) OR (x3 XOR x4)
    return function_of(4, lambda x1, x2, x3, x4: x1 or (not x2) or (x3 ^ x4))
