"""Truth tables and the canalizing layer structure of Boolean functions.

A Boolean function f on n inputs is stored as the integer whose bit i is
f at the assignment encoded by i, where bit j (least significant first)
of i is the value of variable x_{j+1}. All classification routines
(essential-variable tests, canalizing tests, layer peeling) operate on
whole words of this bit vector via shifts and masks rather than looping
over individual assignments.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

MAX_ARITY = 31

_HEX_DIGITS = set("0123456789abcdefABCDEF")


class CanalizingDirection(NamedTuple):
    """Result of a canalizing test for a single variable.

    ``input`` is the canalizing input a, ``output`` the canalized output b.
    ``bidirectional`` is True when both input values canalize (only
    possible when the function depends on that variable alone); in that
    case the a = 0 direction is reported.
    """

    input: int
    output: int
    bidirectional: bool


@functools.lru_cache(maxsize=None)
def _mask0(n, j):
    """Bitmask over all 2^n table indices whose bit j is 0."""
    mask = (1 << (1 << j)) - 1
    width = 1 << (j + 1)
    size = 1 << n
    while width < size:
        mask |= mask << width
        width <<= 1
    return mask


def _is_essential(n, value, j):
    return ((value ^ (value >> (1 << j))) & _mask0(n, j)) != 0


def _canalizing(n, value, j):
    """Return (a, b, bidirectional) if variable at bit j canalizes, else None."""
    m0 = _mask0(n, j)
    half0 = value & m0
    half1 = (value >> (1 << j)) & m0
    c0 = 0 if half0 == 0 else 1 if half0 == m0 else None
    c1 = 0 if half1 == 0 else 1 if half1 == m0 else None
    # fixing the variable at a must force output b while the complementary
    # restriction is not constantly b
    dir0 = c0 is not None and c1 != c0
    dir1 = c1 is not None and c0 != c1
    if dir0:
        return (0, c0, dir1)
    if dir1:
        return (1, c1, False)
    return None


def _restrict(n, value, j, v):
    """Fix the variable at bit j to v, compacting to a 2^(n-1)-bit table."""
    chunk = 1 << j
    cmask = (1 << chunk) - 1
    out = 0
    pos = 0
    base = v * chunk
    step = chunk << 1
    size = 1 << n
    while base < size:
        out |= ((value >> base) & cmask) << pos
        pos += chunk
        base += step
    return out


@dataclass(frozen=True)
class TruthTable:
    """Boolean function on n named inputs x_1, ..., x_n.

    ``value`` holds the output column: bit i of ``value`` is f at the
    assignment where variable x_{j+1} equals bit j (LSB-first) of i.
    """

    n: int
    value: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ARITY:
            raise ValueError(f"arity must be between 0 and {MAX_ARITY}, got {self.n}")
        if not 0 <= self.value < (1 << (1 << self.n)):
            raise ValueError("output column does not fit in 2^n bits")

    @property
    def size(self):
        """Number of rows, 2^n."""
        return 1 << self.n

    def bit(self, index):
        """Output at a single table index."""
        if not 0 <= index < self.size:
            raise IndexError("table index out of range")
        return (self.value >> index) & 1

    def evaluate(self, assignment: Sequence[int]):
        """Evaluate f at an assignment (x_1, ..., x_n) of bits."""
        if len(assignment) != self.n:
            raise ValueError(f"expected {self.n} inputs, got {len(assignment)}")
        index = 0
        for j, x in enumerate(assignment):
            index |= (x & 1) << j
        return (self.value >> index) & 1

    def bits(self):
        """Output column as a list of bits in index order."""
        return [(self.value >> i) & 1 for i in range(self.size)]

    def to_binary(self):
        """Canonical binary string b_0 b_1 ... b_{2^n - 1}."""
        return "".join(str((self.value >> i) & 1) for i in range(self.size))

    def to_hex(self):
        """Hexadecimal form; index 0 is the LSB of the last hex digit."""
        ndigits = (self.size + 3) // 4
        return format(self.value, f"0{ndigits}x")

    def is_constant(self):
        return self.value == 0 or self.value == (1 << self.size) - 1

    @classmethod
    def constant(cls, n, b):
        return cls(n, ((1 << (1 << n)) - 1) if b else 0)


def parse_truth_table(n: int, text: str) -> TruthTable:
    """Parse a truth table from its binary or hexadecimal textual form.

    The binary form is canonical: character i of the string is the output
    at table index i. The hexadecimal form carries the same bit order,
    with index 0 as the least-significant bit of the last hex digit.

    Parameters:
        n (int): arity, 0 <= n <= 31.
        text (str): exactly 2^n binary characters, or ceil(2^n / 4) hex
            digits (an optional ``0x`` prefix forces hex).

    Returns:
        TruthTable

    Raises:
        ValueError: length mismatch, characters outside the alphabet,
            or n outside the supported range.
    """
    if not 0 <= n <= MAX_ARITY:
        raise ValueError(f"arity must be between 0 and {MAX_ARITY}, got {n}")
    size = 1 << n
    raw = text.strip()
    forced_hex = raw[:2].lower() == "0x"
    if forced_hex:
        raw = raw[2:]
    if not forced_hex and len(raw) == size and set(raw) <= {"0", "1"}:
        return TruthTable(n, int(raw[::-1], 2) if raw else 0)
    ndigits = (size + 3) // 4
    if not set(raw) <= _HEX_DIGITS:
        raise ValueError(f"characters outside the binary/hex alphabet in {text!r}")
    if len(raw) != ndigits:
        raise ValueError(
            f"expected {size} binary characters or {ndigits} hex digits "
            f"for n={n}, got {len(raw)}"
        )
    value = int(raw, 16)
    if value >= (1 << size):
        raise ValueError("hexadecimal table encodes more than 2^n bits")
    return TruthTable(n, value)


def essential_variables(f: TruthTable) -> set:
    """Set of variable indices i such that f depends on x_i.

    A variable is essential iff the two half-tables obtained by fixing it
    to 0 and to 1 differ somewhere.
    """
    return {j + 1 for j in range(f.n) if _is_essential(f.n, f.value, j)}


def canalizing_test(f: TruthTable, i: int) -> Optional[CanalizingDirection]:
    """Test whether variable x_i canalizes f.

    Returns the canalizing input a and canalized output b if fixing
    x_i = a makes f constantly b while the restriction to x_i != a is not
    constantly b. Returns None for a non-canalizing variable. When both
    input values canalize, the a = 0 direction is reported with the
    bidirectional flag set.
    """
    if not 1 <= i <= f.n:
        raise IndexError(f"variable index {i} out of range for arity {f.n}")
    res = _canalizing(f.n, f.value, i - 1)
    if res is None:
        return None
    return CanalizingDirection(*res)


@dataclass(frozen=True)
class LayerDecomposition:
    """Unique canalizing-layer structure of a Boolean function.

    ``layers`` is the ordered list of canalizing layers; each layer is a
    tuple of (variable index, canalizing input) pairs. ``outputs`` holds
    the canalized output of each layer (strictly alternating). ``core``
    is the function on the subcube where every layer variable takes its
    non-canalizing value: either a constant bit or a non-canalizing,
    non-constant TruthTable over ``core_variables``. Degenerate variables
    appear in neither layers nor core.
    """

    n: int
    essential: frozenset
    layers: tuple
    outputs: tuple
    core: Union[int, TruthTable]
    core_variables: tuple

    @property
    def depth(self):
        """Canalizing depth k, the total number of layer variables."""
        return sum(len(layer) for layer in self.layers)

    @property
    def num_layers(self):
        return len(self.layers)

    @property
    def layer_sizes(self):
        return tuple(len(layer) for layer in self.layers)

    @property
    def bidirectional(self):
        """True when the single layer variable canalizes in both directions."""
        return self.depth == 1 and not isinstance(self.core, TruthTable)


def _peel(n, value):
    """Iteratively peel canalizing layers off a raw truth table.

    Returns (layers, outputs, rest_n, rest_value, rest_vars) where the
    final restriction (rest) is the table left once every layer variable
    is fixed at its non-canalizing input; rest_vars maps its bit positions
    back to original 1-based variable indices.
    """
    vars_ = list(range(1, n + 1))
    layers = []
    outputs = []
    cur_n, cur_value = n, value
    while True:
        if cur_value == 0 or cur_value == (1 << (1 << cur_n)) - 1:
            break
        found = []
        for pos in range(cur_n):
            res = _canalizing(cur_n, cur_value, pos)
            if res is not None:
                found.append((pos, res[0], res[1]))
        if not found:
            break
        shared = {b for _, _, b in found}
        if len(shared) != 1:
            raise AssertionError(
                "defect: simultaneously canalizing variables disagree on the "
                "canalized output"
            )
        b = shared.pop()
        if outputs and b != 1 - outputs[-1]:
            raise AssertionError("defect: canalized outputs do not alternate")
        layers.append(tuple((vars_[pos], a) for pos, a, _ in found))
        outputs.append(b)
        for pos, a, _ in sorted(found, reverse=True):
            cur_value = _restrict(cur_n, cur_value, pos, 1 - a)
            cur_n -= 1
            del vars_[pos]
    return layers, outputs, cur_n, cur_value, vars_


def decompose(f: TruthTable) -> LayerDecomposition:
    """Compute the unique layer decomposition of f by iterated peeling.

    Layer 1 collects every variable canalizing in f; f is then restricted
    to the subcube where all of them take their non-canalizing values and
    the process repeats until the restriction is non-canalizing or
    constant, which becomes the core. The resulting depth, layer sizes,
    outputs and core do not depend on the peeling order.
    """
    ess = essential_variables(f)
    layers, outputs, rest_n, rest_value, rest_vars = _peel(f.n, f.value)
    if rest_value == 0 or rest_value == (1 << (1 << rest_n)) - 1:
        core = 1 if rest_value else 0
        core_vars = ()
    else:
        # drop variables degenerate in f; they stay degenerate in the rest
        cn, cv = rest_n, rest_value
        for pos in reversed(range(rest_n)):
            if rest_vars[pos] not in ess:
                cv = _restrict(cn, cv, pos, 0)
                cn -= 1
        core = TruthTable(cn, cv)
        core_vars = tuple(v for v in rest_vars if v in ess)
    return LayerDecomposition(
        n=f.n,
        essential=frozenset(ess),
        layers=tuple(layers),
        outputs=tuple(outputs),
        core=core,
        core_variables=core_vars,
    )


def _validate_decomposition(d):
    if len(d.outputs) != len(d.layers):
        raise ValueError("one canalized output is required per layer")
    seen = set()
    for layer in d.layers:
        if not layer:
            raise ValueError("empty canalizing layer")
        for v, a in layer:
            if not 1 <= v <= d.n:
                raise ValueError(f"layer variable x{v} out of range")
            if a not in (0, 1):
                raise ValueError("canalizing input must be a bit")
            if v in seen:
                raise ValueError(f"variable x{v} appears in more than one layer")
            seen.add(v)
    for b_prev, b_next in zip(d.outputs, d.outputs[1:]):
        if b_next != 1 - b_prev:
            raise ValueError("canalized outputs must strictly alternate")
    for b in d.outputs:
        if b not in (0, 1):
            raise ValueError("canalized output must be a bit")
    if seen & set(d.core_variables):
        raise ValueError("core variables overlap layer variables")
    if isinstance(d.core, TruthTable):
        if d.core.n != len(d.core_variables):
            raise ValueError("core arity does not match its variable list")
        if d.core.is_constant():
            raise ValueError("constant core must be given as a bit, not a table")
        for j in range(d.core.n):
            if not _is_essential(d.core.n, d.core.value, j):
                raise ValueError("core must depend on all of its variables")
            if _canalizing(d.core.n, d.core.value, j) is not None:
                raise ValueError("core must be non-canalizing")
    else:
        if d.core not in (0, 1):
            raise ValueError("constant core must be a bit")
        if d.core_variables:
            raise ValueError("a constant core has no variables")
        if d.layers:
            if d.core == d.outputs[-1]:
                raise ValueError(
                    "constant core must differ from the last canalized output"
                )
            if len(d.layers) >= 2 and len(d.layers[-1]) < 2:
                raise ValueError(
                    "with a constant core and two or more layers the last "
                    "layer needs at least two variables"
                )
    if set(d.essential) != seen | set(d.core_variables):
        raise ValueError("essential set must equal layer plus core variables")


def reconstruct(d: LayerDecomposition) -> TruthTable:
    """Rebuild the truth table encoded by a layer decomposition.

    Evaluates the nested canalizing form layer by layer: the first layer
    whose variable hits its canalizing input fixes the output; otherwise
    the core decides. Degenerate variables (absent from the decomposition)
    are reinstated as non-essential. Inverse of :func:`decompose`.

    Raises:
        ValueError: if the decomposition violates an invariant
            (non-alternating outputs, canalizing core, empty layer, ...).
    """
    _validate_decomposition(d)
    n = d.n
    if (
        not d.layers
        and isinstance(d.core, TruthTable)
        and d.core_variables == tuple(range(1, n + 1))
    ):
        return TruthTable(n, d.core.value)
    value = 0
    for idx in range(1 << n):
        out = None
        for layer, b in zip(d.layers, d.outputs):
            if any(((idx >> (v - 1)) & 1) == a for v, a in layer):
                out = b
                break
        if out is None:
            if isinstance(d.core, TruthTable):
                cidx = 0
                for pos, v in enumerate(d.core_variables):
                    cidx |= ((idx >> (v - 1)) & 1) << pos
                out = (d.core.value >> cidx) & 1
            else:
                out = d.core
        value |= out << idx
    return TruthTable(n, value)


def classify_bits(n: int, value: int) -> tuple:
    """(m, k, r) classification of a raw output column (see classify)."""
    m = 0
    for j in range(n):
        if _is_essential(n, value, j):
            m += 1
    layers, _, _, _, _ = _peel(n, value)
    k = sum(len(layer) for layer in layers)
    return m, k, len(layers)


def classify(f: TruthTable) -> tuple:
    """Classify f as (m, k, r).

    m is the number of essential variables, k the canalizing depth and r
    the number of canalizing layers. Constants yield (0, 0, 0).
    """
    return classify_bits(f.n, f.value)
