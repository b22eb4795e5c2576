"""Boolean functions as truth tables, with the classic analytics.

A function of n variables is a 2^n-entry bit table. Table index k IS the
flattened input vector: the variables are named x_1 ... x_n reading the
index bits from most significant to least significant, so x_1 is the top
bit of k. The hex form packs table[0] into the most significant bit of the
first byte; the 16-bit table (0,0,0,0,0,1,1,0,0,0,1,1,0,1,0,1) prints as
"0635".

Transforms run on unpacked numpy arrays: the Walsh spectrum through the
in-place butterfly on the polarity table, the algebraic normal form through
the subset-sum transform over GF(2), which is its own inverse.
"""

from __future__ import annotations

import numpy as np

from .errors import OddArity, OverlapDetected, WrongSpreadSize
from .lrs import Subspace


class TruthTable:
    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits):
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.shape != (1 << n,):
            raise ValueError(f"expected {1 << n} bits for n={n}, got {arr.shape}")
        arr = arr.copy()
        arr.setflags(write=False)
        self.n = n
        self.bits = arr

    @classmethod
    def from_support(cls, n: int, support) -> "TruthTable":
        bits = np.zeros(1 << n, dtype=np.uint8)
        idx = np.asarray(sorted(support), dtype=np.int64)
        if idx.size:
            bits[idx] = 1
        return cls(n, bits)

    @classmethod
    def from_hex(cls, n: int, text: str) -> "TruthTable":
        if len(text) != -(-(1 << n) // 4):
            raise ValueError(f"expected {-(-(1 << n) // 4)} hex digits for n={n}")
        raw = bytes.fromhex(text if len(text) % 2 == 0 else text + "0")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8))[: 1 << n]
        return cls(n, bits)

    def support(self) -> list[int]:
        return [int(i) for i in np.nonzero(self.bits)[0]]

    def weight(self) -> int:
        return int(self.bits.sum())

    def hex(self) -> str:
        # ceil(2^n / 4) digits; sub-byte tables drop the padding nibble
        return np.packbits(self.bits).tobytes().hex()[: -(-(1 << self.n) // 4)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruthTable)
            and self.n == other.n
            and np.array_equal(self.bits, other.bits)
        )

    def __repr__(self) -> str:
        return f"TruthTable(n={self.n}, hex={self.hex()!r})"


class WalshSpectrum:
    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        self.n = n
        self.values = np.asarray(values, dtype=np.int32)
        self.values.setflags(write=False)


class Anf:
    """Algebraic normal form: one coefficient bit per monomial index.

    Monomial index I is read like a truth-table index: bit of x_j set means
    the variable x_j (x_1 = top bit) occurs in the monomial. Index 0 is the
    constant term.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits):
        self.n = n
        self.bits = np.asarray(bits, dtype=np.uint8)
        self.bits.setflags(write=False)

    @property
    def is_zero(self) -> bool:
        return not self.bits.any()

    def monomials(self) -> list[int]:
        return [int(i) for i in np.nonzero(self.bits)[0]]


def from_spread(spread: list[Subspace], plus_type: bool) -> TruthTable:
    """Indicator of the union of spread members.

    Negative type: the union minus the zero vector, 2^(m-1) members,
    weight 2^(n-1) - 2^(m-1). Positive type: one extra member and the zero
    vector kept in, weight 2^(n-1) + 2^(m-1).
    """
    if not spread:
        raise WrongSpreadSize("empty spread")
    n = spread[0].n
    m = n // 2
    t_expected = (1 << (m - 1)) + (1 if plus_type else 0)
    if len(spread) != t_expected:
        raise WrongSpreadSize(
            f"need {t_expected} members for this type at n={n}, got {len(spread)}"
        )
    for s in spread:
        if s.n != n or len(s.vectors) != (1 << m):
            raise WrongSpreadSize(f"member has n={s.n}, size {len(s.vectors)}")
    union = np.unique(np.concatenate([np.asarray(s.vectors, dtype=np.int64) for s in spread]))
    if len(union) != len(spread) * ((1 << m) - 1) + 1:
        raise OverlapDetected("spread members share nonzero vectors")
    if not plus_type:
        union = union[union != 0]
    return TruthTable.from_support(n, union)


def mobius(bits: np.ndarray) -> np.ndarray:
    """Subset-sum transform over GF(2); involutive, maps table <-> ANF."""
    out = np.array(bits, dtype=np.uint8)
    size = out.shape[0]
    h = 1
    while h < size:
        v = out.reshape(-1, 2 * h)
        v[:, h:] ^= v[:, :h]
        h *= 2
    return out


def walsh_transform(tt: TruthTable) -> WalshSpectrum:
    """Fast butterfly on the polarity table, O(n 2^n) additions."""
    s = 1 - 2 * tt.bits.astype(np.int32)
    size = s.shape[0]
    h = 1
    while h < size:
        v = s.reshape(-1, 2 * h)
        left = v[:, :h].copy()
        right = v[:, h:].copy()
        v[:, :h] = left + right
        v[:, h:] = left - right
        h *= 2
    return WalshSpectrum(tt.n, s)


def nonlinearity(spectrum: WalshSpectrum) -> int:
    return (1 << (spectrum.n - 1)) - int(np.abs(spectrum.values).max()) // 2


def is_bent(tt: TruthTable) -> bool:
    """Flat spectrum test: every |W(a)| equals 2^(n/2)."""
    if tt.n % 2:
        raise OddArity(f"bentness needs even arity, got n={tt.n}")
    w = walsh_transform(tt).values
    return bool((np.abs(w) == 1 << (tt.n // 2)).all())


def anf(tt: TruthTable) -> Anf:
    return Anf(tt.n, mobius(tt.bits))


def truth_table_of_anf(a: Anf) -> TruthTable:
    return TruthTable(a.n, mobius(a.bits))


def algebraic_degree(a: Anf) -> int:
    """Largest monomial size; constants (including the zero function,
    flagged by Anf.is_zero) report degree 0."""
    if a.is_zero:
        return 0
    idx = np.nonzero(a.bits)[0]
    return max(int(i).bit_count() for i in idx)


def format_anf(a: Anf) -> str:
    """Render as x-terms, e.g. 'x1*x3 + x2*x3 + x2*x4'; '0' when empty."""
    if a.is_zero:
        return "0"
    terms = []
    for idx in a.monomials():
        if idx == 0:
            terms.append(((), "1"))
            continue
        names = tuple(a.n - p for p in range(a.n - 1, -1, -1) if (idx >> p) & 1)
        terms.append((names, "*".join(f"x{v}" for v in names)))
    terms.sort(key=lambda t: (-len(t[0]), t[0]))
    return " + ".join(text for _, text in terms)
