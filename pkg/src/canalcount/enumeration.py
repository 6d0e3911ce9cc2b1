"""Exact counts of Boolean functions by essential variables, depth and layers.

All quantities are arbitrary-precision integers; no floating point is used
anywhere in this module. Notation follows the classification triple
(m, k, r): m essential variables, canalizing depth k, r canalizing layers.

    N(n)         -- all n-input functions, 2^(2^n)
    N(n, m)      -- stratified by essential count
    C(n, k)      -- stratified by canalizing depth
    C(n, k, r)   -- stratified by depth and layer count
    N(n, m, k)   -- by essential count and depth
    N(n, m, k, r)-- the full stratification

C(n, k, r) is computed constructively from the unique layer normal form:
choose the k conditionally canalizing variables, an ordered set partition
of them into r layers, their canalizing inputs, the first canalized output
(the rest alternate), and a core that is either constant (an NCF on the k
chosen variables) or a non-constant non-canalizing function of the other
n - k variables. Nested canalizing functions additionally require the last
layer to hold at least two variables (for n >= 2).
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Mapping

DEFAULT_MAX_N = 16


def total_functions(n: int) -> int:
    """N(n) = 2^(2^n), the number of Boolean functions on n inputs."""
    if n < 0:
        raise ValueError("arity must be non-negative")
    return 1 << (1 << n)


def multinomial(parts) -> int:
    """Exact multinomial coefficient (sum(parts); parts)."""
    out = math.factorial(sum(parts))
    for p in parts:
        out //= math.factorial(p)
    return out


def compositions(k: int, r: int) -> list:
    """Ordered compositions of k into r positive parts, with weights.

    Returns a list of ((k_1, ..., k_r), multinomial(k; k_1, ..., k_r))
    pairs in lexicographic order of the cut positions. The weights sum to
    the number of ordered set partitions of k labeled items into r blocks.
    """
    if r < 1 or r > k:
        raise ValueError(f"need 1 <= r <= k, got k={k}, r={r}")
    out = []
    for cuts in itertools.combinations(range(1, k), r - 1):
        bounds = (0,) + cuts + (k,)
        parts = tuple(b - a for a, b in zip(bounds, bounds[1:]))
        out.append((parts, multinomial(parts)))
    return out


@functools.cache
def ordered_set_partitions(k: int, r: int) -> int:
    """Number of ordered set partitions of k labeled items into r blocks."""
    return sum(w for _, w in compositions(k, r))


@functools.cache
def count_ncf(n: int, r: int) -> int:
    """C(n, n, r): nested canalizing functions on n inputs with r layers.

    Counts layer assignments (compositions of n whose last part is >= 2),
    canalizing inputs (2^n) and the first canalized output (2). The lone
    n = 1 case is halved because x and its negation each admit both
    canalizing directions.
    """
    if n < 1:
        raise ValueError("NCFs need at least one input")
    if n == 1:
        return 2 if r == 1 else 0
    if r < 1 or r > n - 1:
        return 0
    weight = sum(w for parts, w in compositions(n, r) if parts[-1] >= 2)
    return (1 << (n + 1)) * weight


@functools.cache
def count_depth(n: int, k: int) -> int:
    """C(n, k): n-input functions with canalizing depth exactly k."""
    if not 0 <= k <= n:
        return 0
    if k == 0:
        return total_functions(n) - sum(count_depth(n, j) for j in range(1, n + 1))
    return sum(count_depth_layers(n, k, r) for r in range(1, k + 1))


@functools.cache
def count_depth_layers(n: int, k: int, r: int) -> int:
    """C(n, k, r): depth-k functions on n inputs with r canalizing layers.

    For 0 < k < n the count splits by core: a non-constant non-canalizing
    core on the remaining n - k variables (C(n-k, 0) - 2 choices), or a
    constant core, in which case the function is an NCF on the k chosen
    variables. Depth 0 is computed by complement, never directly.
    """
    if not 0 <= r <= k <= n:
        return 0
    if (k == 0) != (r == 0):
        return 0
    if k == 0:
        return count_depth(n, 0)
    if k == n:
        return count_ncf(n, r)
    choose = math.comb(n, k)
    noncore = count_depth(n - k, 0) - 2
    free_core = choose * (1 << (k + 1)) * ordered_set_partitions(k, r) * noncore
    constant_core = choose * count_ncf(k, r)
    return free_core + constant_core


@functools.cache
def count_by_essential(n: int, m: int) -> int:
    """N(n, m): n-input functions with exactly m essential variables."""
    if not 0 <= m <= n:
        return 0
    if m == 0:
        return 2
    if m < n:
        return math.comb(n, m) * count_by_essential(m, m)
    return total_functions(n) - sum(count_by_essential(n, i) for i in range(n))


def nondegenerate_inclusion_exclusion(n: int) -> int:
    """N(n, n) by inclusion-exclusion over the essential-variable subsets.

    Independent route; must agree with count_by_essential(n, n) exactly.
    """
    return sum(
        (-1) ** (n - m) * math.comb(n, m) * total_functions(m) for m in range(n + 1)
    )


@functools.cache
def count_full(n: int, m: int, k: int) -> int:
    """N(n, m, k): by essential count and canalizing depth, recursively."""
    if not (0 <= m <= n and 0 <= k <= n):
        return 0
    if m < k:
        return 0
    if m == 0:
        return 2 if k == 0 else 0
    if m < n:
        return math.comb(n, m) * count_full(m, m, k)
    return count_depth(n, k) - sum(count_full(n, i, k) for i in range(n))


@functools.cache
def count_full_layers(n: int, m: int, k: int, r: int) -> int:
    """N(n, m, k, r): the full stratification, recursively."""
    if not (0 <= m <= n and 0 <= r <= k <= n):
        return 0
    if m < k or k < r:
        return 0
    if (k == 0) != (r == 0):
        return 0
    if m == 0:
        return 2 if k == 0 else 0
    if m < n:
        return math.comb(n, m) * count_full_layers(m, m, k, r)
    return count_depth_layers(n, k, r) - sum(
        count_full_layers(n, i, k, r) for i in range(n)
    )


def _valid_cells(max_n):
    for n in range(max_n + 1):
        for m in range(n + 1):
            for k in range(m + 1):
                for r in range(1, k + 1) if k else (0,):
                    yield n, m, k, r


@dataclass(frozen=True)
class CountTable:
    """Immutable table of N(n, m, k, r) for all 0 <= r <= k <= m <= n <= max_n.

    Cells exist only on the valid index set (r = 0 iff k = 0); every
    marginal view sums cells, so checking the marginals against the direct
    formulas exercises the recursions for real.
    """

    max_n: int
    cells: Mapping

    def count(self, n, m, k, r):
        """N(n, m, k, r)."""
        return self.cells.get((n, m, k, r), 0)

    def by_essential_depth(self, n, m, k):
        """N(n, m, k)."""
        return sum(
            self.cells.get((n, m, k, r), 0)
            for r in (range(1, k + 1) if k else (0,))
        )

    def by_depth_layers(self, n, k, r):
        """C(n, k, r)."""
        return sum(self.cells.get((n, m, k, r), 0) for m in range(n + 1))

    def by_depth(self, n, k):
        """C(n, k)."""
        return sum(
            self.by_depth_layers(n, k, r) for r in (range(1, k + 1) if k else (0,))
        )

    def by_essential(self, n, m):
        """N(n, m)."""
        return sum(self.by_essential_depth(n, m, k) for k in range(m + 1))

    def total(self, n):
        """N(n)."""
        return sum(self.by_essential(n, m) for m in range(n + 1))

    def rows(self):
        """All (n, m, k, r, count) rows in lexicographic cell order."""
        for cell in _valid_cells(self.max_n):
            yield (*cell, self.cells[cell])

    def to_csv(self, stream):
        """Write the full table as CSV with header ``n,m,k,r,count``."""
        stream.write("n,m,k,r,count\n")
        for n, m, k, r, count in self.rows():
            stream.write(f"{n},{m},{k},{r},{count}\n")


def build_table(max_n: int, bound: int = DEFAULT_MAX_N) -> CountTable:
    """Fill a CountTable for all arities up to max_n.

    Cells are filled in increasing n so every recursion only consults
    strictly smaller tables plus the already-complete m < n rows.

    Raises:
        ValueError: max_n negative or beyond the configured bound
            (default 16, where N(n) is a 65536-bit integer).
    """
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    if max_n > bound:
        raise ValueError(f"max_n={max_n} exceeds the configured bound {bound}")
    cells = {cell: count_full_layers(*cell) for cell in _valid_cells(max_n)}
    return CountTable(max_n=max_n, cells=cells)
