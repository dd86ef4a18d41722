"""Cyclic simplex codes [2^k - 1, k, 2^(k-1)].

Every nonzero codeword of a cyclic simplex code is a cyclic shift of the
generator polynomial and has weight exactly 2^(k-1). The distance formulas
in :mod:`qcsimplex.distance` rely on that, so construction validates it
eagerly by enumerating all ``m`` shifts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .gf2poly import CyclicWord, Gf2Poly, poly_divmod, shift_mul

__all__ = [
    "SimplexCode",
    "SimplexError",
    "simplex_from_generator",
    "simplex_from_primitive",
    "codewords",
    "infer_k",
]


class SimplexError(ValueError):
    """The polynomial does not generate a cyclic simplex code."""


def infer_k(g: Gf2Poly) -> int:
    """Dimension ``k`` for which ``deg g = 2^k - 1 - k``."""
    if g.degree is None:
        raise SimplexError("zero polynomial is not a generator")
    k = 1
    while (1 << k) - 1 - k < g.degree:
        k += 1
    if (1 << k) - 1 - k != g.degree:
        raise SimplexError(f"degree {g.degree} is not 2^k - 1 - k for any k")
    return k


@dataclass(frozen=True)
class SimplexCode:
    k: int
    g: Gf2Poly
    m: int = field(init=False)

    def __post_init__(self):
        if self.k < 1:
            raise SimplexError(f"k must be >= 1, got {self.k}")
        m = (1 << self.k) - 1
        object.__setattr__(self, "m", m)
        if self.g.degree != m - self.k:
            raise SimplexError(
                f"generator degree {self.g.degree} != m - k = {m - self.k} for k={self.k}"
            )
        x_m_1 = Gf2Poly((1 << m) | 1)
        if not poly_divmod(x_m_1, self.g)[1].is_zero():
            raise SimplexError(f"{self.g} does not divide x^{m} - 1")
        target = 1 << (self.k - 1)
        seen = set()
        for w in self.shifts():
            if w.weight() != target:
                raise SimplexError(
                    f"not a simplex generator: shift of weight {w.weight()}, expected {target}"
                )
            seen.add(w.bits)
        if len(seen) != m:
            raise SimplexError(f"not a simplex generator: only {len(seen)} distinct shifts of {m}")

    @property
    def n(self) -> int:
        return self.m

    @property
    def d(self) -> int:
        return 1 << (self.k - 1)

    @property
    def word(self) -> CyclicWord:
        return CyclicWord.from_poly(self.g, self.m)

    def shifts(self) -> Iterator[CyclicWord]:
        w = CyclicWord.from_poly(self.g, self.m)
        for i in range(self.m):
            yield shift_mul(w, i)

    def encode(self, u: Gf2Poly) -> CyclicWord:
        """Codeword ``u(x) g(x) mod x^m - 1``."""
        return CyclicWord.from_poly(u * self.g, self.m)


def simplex_from_generator(g: Gf2Poly, k: int) -> SimplexCode:
    return SimplexCode(k=k, g=g)


def simplex_from_primitive(h: Gf2Poly) -> SimplexCode:
    """Simplex code with generator ``(x^m - 1) / h`` for a primitive ``h`` of degree k."""
    k = h.degree
    if k is None or k < 2:
        raise SimplexError(f"check polynomial must have degree >= 2, got {h}")
    m = (1 << k) - 1
    q, r = poly_divmod(Gf2Poly((1 << m) | 1), h)
    if not r.is_zero():
        raise SimplexError(f"{h} does not divide x^{m} - 1")
    try:
        return SimplexCode(k=k, g=q)
    except SimplexError as exc:
        raise SimplexError(f"h not primitive: {h} ({exc})") from exc


def codewords(c: SimplexCode) -> Iterator[CyclicWord]:
    """Zero word first, then the ``m`` shifts ``x^i g``."""
    yield CyclicWord(c.m, 0)
    yield from c.shifts()
