"""Arithmetic in the binary extension fields GF(2^l).

A field element is a plain int in [0, 2^l): bit j holds the coefficient of
alpha^j, where alpha is a root of the defining modulus. The modulus is an
(l+1)-bit int read the same way (bit j = coefficient of X^j). This integer
encoding is fixed so that every serialized artifact (kernels, truth tables,
CSV rows) is bit-exact across runs and platforms.

All statistics computed downstream (ranks, weights, degrees, Walsh spectra)
are invariant under a change of defining polynomial: switching the modulus
re-indexes inputs by a fixed GF(2)-linear bijection, which preserves both
the Walsh multiset and the rank of the derived incidence matrix. The
canonical moduli below therefore pin the byte-level outputs without
affecting any of the reported invariants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroInverse

# Least irreducible of each degree, by integer encoding.
CANONICAL_MODULI = {
    1: 0b11,        # X + 1
    2: 0b111,       # X^2 + X + 1
    3: 0b1011,      # X^3 + X + 1
    4: 0b10011,     # X^4 + X + 1
}


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(2^l) with its defining polynomial."""

    l: int
    modulus: int

    @property
    def q(self) -> int:
        return 1 << self.l


def _bitpoly_mulmod(x: int, y: int, mod: int, deg: int) -> int:
    # carry-less multiply of GF(2)[X] ints, reduced when bit `deg` appears
    acc = 0
    while y:
        if y & 1:
            acc ^= x
        y >>= 1
        x <<= 1
        if (x >> deg) & 1:
            x ^= mod
    return acc


def _bitpoly_irreducible(f: int, deg: int) -> bool:
    # trial division by every polynomial of degree 1..deg//2
    for d in range(1, deg // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            r = f
            while r.bit_length() - 1 >= d:
                r ^= g << (r.bit_length() - 1 - d)
            if r == 0:
                return False
    return True


def field(l: int) -> FieldSpec:
    """Return GF(2^l) with its canonical defining polynomial.

    Degrees 1 through 4 use the fixed table above; larger degrees take the
    irreducible with the smallest integer encoding, found by search. The
    choice is deterministic either way.
    """
    if l < 1:
        raise ValueError(f"extension degree must be positive, got {l}")
    if l in CANONICAL_MODULI:
        return FieldSpec(l, CANONICAL_MODULI[l])
    for f in range(1 << l, 1 << (l + 1)):
        if f & 1 and _bitpoly_irreducible(f, l):
            return FieldSpec(l, f)
    raise ValueError(f"no irreducible of degree {l} found")  # unreachable


def fe_add(spec: FieldSpec, x: int, y: int) -> int:
    """Field addition: bitwise XOR. Its own inverse in characteristic 2."""
    return x ^ y


def fe_mul(spec: FieldSpec, x: int, y: int) -> int:
    """Field multiplication by shift-and-reduce against the modulus."""
    return _bitpoly_mulmod(x, y, spec.modulus, spec.l)


def fe_inv(spec: FieldSpec, x: int) -> int:
    """Multiplicative inverse via x^(q-2) (square and multiply)."""
    if x == 0:
        raise ZeroInverse("0 has no multiplicative inverse")
    e = spec.q - 2
    out, base = 1, x
    while e:
        if e & 1:
            out = fe_mul(spec, out, base)
        base = fe_mul(spec, base, base)
        e >>= 1
    return out


def describe(spec: FieldSpec) -> str:
    """Report form of the field, e.g. GF(2^2)/modulus=0x7."""
    return f"GF(2^{spec.l})/modulus={hex(spec.modulus)}"
