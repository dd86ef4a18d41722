"""Polynomials over GF(2) packed into Python integers.

Bit ``i`` of the backing integer is the coefficient of ``x**i``. Octal text
is written with the highest-degree coefficients on the left, three bits per
digit, so ``"7531"`` is ``x^11 + x^10 + x^9 + x^8 + x^6 + x^4 + x^3 + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

__all__ = [
    "Gf2Poly",
    "CyclicWord",
    "OctalParseError",
    "parse_octal",
    "format_octal",
    "poly_mul",
    "poly_divmod",
    "shift_mul",
    "weight",
]

_OCTAL_DIGITS = frozenset("01234567")


class OctalParseError(ValueError):
    """Raised for malformed octal polynomial text or out-of-range degrees."""


@dataclass(frozen=True, order=False)
class Gf2Poly:
    """Immutable polynomial over GF(2)."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("polynomial bit pattern must be non-negative")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Gf2Poly":
        value = 0
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            value ^= 1 << e
        return cls(value)

    @classmethod
    def monomial(cls, e: int) -> "Gf2Poly":
        return cls(1 << e)

    @property
    def degree(self) -> Optional[int]:
        """Highest exponent with a set coefficient, ``None`` for the zero polynomial."""
        if self.bits == 0:
            return None
        return self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def exponents(self) -> list[int]:
        out = []
        b, i = self.bits, 0
        while b:
            if b & 1:
                out.append(i)
            b >>= 1
            i += 1
        return out

    def coefficients(self, length: Optional[int] = None) -> list[int]:
        """Coefficient list, ``x^0`` first."""
        if length is None:
            length = self.bits.bit_length()
        return [(self.bits >> i) & 1 for i in range(length)]

    def weight(self) -> int:
        return self.bits.bit_count()

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.bits ^ other.bits)

    __xor__ = __add__
    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        return poly_mul(self, other)

    def __divmod__(self, other: "Gf2Poly"):
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Gf2Poly") -> "Gf2Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return poly_divmod(self, other)[1]

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(terms)


def parse_octal(text: str, m: Optional[int] = None) -> Gf2Poly:
    """Parse an octal string, most significant digit first.

    Leading zero digits are allowed. If ``m`` is given the degree must be
    below ``m``.
    """
    text = text.strip()
    if not text or any(ch not in _OCTAL_DIGITS for ch in text):
        raise OctalParseError(f"not an octal polynomial: {text!r}")
    poly = Gf2Poly(int(text, 8))
    if m is not None and poly.degree is not None and poly.degree >= m:
        raise OctalParseError(f"degree {poly.degree} of {text!r} does not fit below m={m}")
    return poly


def format_octal(p: Gf2Poly, min_digits: Optional[int] = None) -> str:
    s = format(p.bits, "o")
    if min_digits is not None:
        s = s.rjust(min_digits, "0")
    return s


def poly_mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Carryless product."""
    x, y = a.bits, b.bits
    if x.bit_count() > y.bit_count():
        x, y = y, x
    acc = 0
    while x:
        low = x & -x
        acc ^= y << (low.bit_length() - 1)
        x ^= low
    return Gf2Poly(acc)


def poly_divmod(a: Gf2Poly, b: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    if b.bits == 0:
        raise ZeroDivisionError("polynomial division by zero")
    r = a.bits
    db = b.bits.bit_length()
    q = 0
    while r.bit_length() >= db:
        s = r.bit_length() - db
        q |= 1 << s
        r ^= b.bits << s
    return Gf2Poly(q), Gf2Poly(r)


@dataclass(frozen=True)
class CyclicWord:
    """Element of GF(2)[x] / (x^m - 1), i.e. a length-``m`` binary word."""

    m: int
    bits: int = 0

    def __post_init__(self):
        if self.m <= 0:
            raise ValueError("m must be positive")
        if self.bits < 0 or self.bits >> self.m:
            raise ValueError(f"bit pattern does not fit in {self.m} positions")

    @classmethod
    def from_poly(cls, p: Gf2Poly, m: int) -> "CyclicWord":
        """Reduce ``p`` modulo ``x^m - 1`` by folding."""
        mask = (1 << m) - 1
        b, acc = p.bits, 0
        while b:
            acc ^= b & mask
            b >>= m
        return cls(m, acc)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "CyclicWord":
        value = 0
        for i, bit in enumerate(bits):
            if bit:
                value |= 1 << i
        return cls(len(bits), value)

    def to_poly(self) -> Gf2Poly:
        return Gf2Poly(self.bits)

    def to_array(self) -> np.ndarray:
        return np.array([(self.bits >> i) & 1 for i in range(self.m)], dtype=np.uint8)

    def to_str(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.m))

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "CyclicWord") -> "CyclicWord":
        if other.m != self.m:
            raise ValueError(f"ring mismatch: m={self.m} vs m={other.m}")
        return CyclicWord(self.m, self.bits ^ other.bits)

    __add__ = __xor__

    def __mul__(self, other: "CyclicWord") -> "CyclicWord":
        if other.m != self.m:
            raise ValueError(f"ring mismatch: m={self.m} vs m={other.m}")
        return CyclicWord.from_poly(poly_mul(self.to_poly(), other.to_poly()), self.m)


def shift_mul(w: CyclicWord, i: int) -> CyclicWord:
    """Return ``x^i * w(x) mod x^m - 1`` (rotation toward higher exponents)."""
    m = w.m
    i %= m
    if i == 0:
        return w
    mask = (1 << m) - 1
    return CyclicWord(m, ((w.bits << i) | (w.bits >> (m - i))) & mask)


def weight(w: Union[CyclicWord, Gf2Poly, int, Sequence[int], np.ndarray]) -> int:
    """Hamming weight of a word, polynomial, packed integer or 0/1 sequence."""
    if isinstance(w, (CyclicWord, Gf2Poly)):
        return w.bits.bit_count()
    if isinstance(w, (int, np.integer)):
        return int(w).bit_count()
    arr = np.asarray(w)
    if arr.dtype == np.uint64:
        return int(np.bitwise_count(arr).sum())
    return int(np.count_nonzero(arr))
