"""Distance vectors, closed-form QC distance evaluators and the exhaustive verifier.

The closed forms rest on simplex equidistance: every nonzero codeword of a
simplex code is ``x^s g`` for some ``s``, so the weight of any codeword of a
2- or 3-generator construction reduces to a sum of per-block entries of a
precomputed distance vector or table. The exhaustive enumerator shares no
code with those formulas and serves as their oracle.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .gf2poly import shift_mul
from .qcmodel import QcCodeSpec, _pack_rows, generator_matrix
from .simplex import SimplexCode

__all__ = [
    "DistanceVector",
    "DistanceTable",
    "CodeReport",
    "DimensionCapError",
    "EmptyCodeError",
    "DEFAULT_DIMENSION_CAP",
    "pair_distance_vector",
    "triple_distance_table",
    "two_gen_formula_distance",
    "three_gen_formula_distance",
    "row_basis",
    "weight_distribution",
    "exhaustive_min_distance",
    "two_weight_check",
]

DEFAULT_DIMENSION_CAP = 26
# Low message bits are tabulated in one array of 2**_TABLE_BITS codewords.
_TABLE_BITS = 16


class DimensionCapError(ValueError):
    """Exhaustive enumeration refused because the dimension exceeds the cap."""


class EmptyCodeError(ValueError):
    """The spec has no generator rows."""


@dataclass(frozen=True)
class DistanceVector:
    """``d[i] = wt(g_a + x^i g_b)``; indices are taken modulo ``m``."""

    m: int
    d: tuple[int, ...]

    def __post_init__(self):
        if len(self.d) != self.m:
            raise ValueError(f"distance vector needs {self.m} entries, got {len(self.d)}")

    def __getitem__(self, i: int) -> int:
        return self.d[i % self.m]

    def __len__(self) -> int:
        return self.m

    def __iter__(self):
        return iter(self.d)

    @property
    def values(self) -> np.ndarray:
        return np.asarray(self.d, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class DistanceTable:
    """``d[i, j] = wt(g1 + x^i g2 + x^j g3)``."""

    m: int
    d: np.ndarray

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return int(self.d[i % self.m, j % self.m])

    def __eq__(self, other):
        return isinstance(other, DistanceTable) and self.m == other.m and np.array_equal(self.d, other.d)


@dataclass(frozen=True)
class CodeReport:
    n: int
    K: int
    d_min: Optional[int]
    weight_distribution: dict[int, int] = field(default_factory=dict)
    codeword_count: int = 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "K": self.K,
            "d_min": self.d_min,
            "codeword_count": self.codeword_count,
            "weight_distribution": {str(w): c for w, c in sorted(self.weight_distribution.items())},
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "CodeReport":
        return cls(
            n=obj["n"],
            K=obj["K"],
            d_min=obj["d_min"],
            weight_distribution={int(w): int(c) for w, c in obj["weight_distribution"].items()},
            codeword_count=obj["codeword_count"],
        )


def pair_distance_vector(ca: SimplexCode, cb: SimplexCode) -> DistanceVector:
    if ca.m != cb.m:
        raise ValueError(f"mismatched block length: {ca.m} vs {cb.m}")
    wa, wb = ca.word, cb.word
    return DistanceVector(ca.m, tuple((wa ^ shift_mul(wb, i)).weight() for i in range(ca.m)))


def triple_distance_table(c1: SimplexCode, c2: SimplexCode, c3: SimplexCode) -> DistanceTable:
    if not c1.m == c2.m == c3.m:
        raise ValueError(f"mismatched block lengths: {c1.m}, {c2.m}, {c3.m}")
    m = c1.m
    w1 = c1.word
    s2 = [w1 ^ shift_mul(c2.word, i) for i in range(m)]
    s3 = [shift_mul(c3.word, j).bits for j in range(m)]
    table = np.empty((m, m), dtype=np.int64)
    for i, u in enumerate(s2):
        table[i] = [(u.bits ^ v).bit_count() for v in s3]
    return DistanceTable(m, table)


def _window_sums(d: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    """``out[j] = sum_t d[(j + offsets[t]) mod m]`` for every ``j``."""
    m = d.shape[0]
    idx = (np.arange(m)[:, None] + offsets[None, :]) % m
    return d[idx].sum(axis=1)


def two_gen_formula_distance(D: DistanceVector, offsets: Sequence[int], k: int) -> int:
    """Minimum distance of the 2-generator code with shifts ``(0, *offsets)``.

    The ``p * 2^(k-1)`` term is the weight of codewords that use only one
    generator; it is not covered by the window sums.
    """
    a = np.asarray([0, *offsets], dtype=np.int64)
    single = len(a) * (1 << (k - 1))
    return int(min(single, _window_sums(D.values, a).min()))


def three_gen_formula_distance(
    D12: DistanceVector,
    D13: DistanceVector,
    D23: DistanceVector,
    D123: DistanceTable,
    a: Sequence[int],
    b: Sequence[int],
    k: int,
) -> int:
    if len(a) != len(b):
        raise ValueError("a and b must have the same length")
    m = D12.m
    av = np.asarray([0, *a], dtype=np.int64) % m
    bv = np.asarray([0, *b], dtype=np.int64) % m
    best = len(av) * (1 << (k - 1))
    best = min(best, int(_window_sums(D12.values, av).min()))
    best = min(best, int(_window_sums(D13.values, bv).min()))
    best = min(best, int(_window_sums(D23.values, (bv - av) % m).min()))
    best = min(best, int(_table_sums(D123.d, av, bv).min()))
    return best


def _table_sums(table: np.ndarray, av: np.ndarray, bv: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(table)
    for x, y in zip(av.tolist(), bv.tolist()):
        acc += np.roll(table, (-x, -y), axis=(0, 1))
    return acc


def row_basis(matrix: np.ndarray) -> np.ndarray:
    """Rows of ``matrix`` that are linearly independent of the rows before them."""
    matrix = np.asarray(matrix, dtype=np.uint8)
    pivots: dict[int, int] = {}
    keep = []
    for r, v in enumerate(_pack_rows(matrix)):
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                keep.append(r)
                break
            v ^= pivots[top]
    return matrix[keep]


def _pack_uint64(matrix: np.ndarray) -> np.ndarray:
    rows, n = matrix.shape
    words = max(1, (n + 63) // 64)
    padded = np.zeros((rows, words * 64), dtype=np.uint8)
    padded[:, :n] = matrix
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def _gray_segment(
    table: np.ndarray, high_rows: np.ndarray, start: int, stop: int, n: int
) -> np.ndarray:
    """Weight counts for high message parts ``gray(start) .. gray(stop - 1)``.

    Successive high parts differ in one bit (reflected Gray code), so each
    step costs one row XOR before the whole low table is combined with it.
    """
    counts = np.zeros(n + 1, dtype=np.int64)
    cur = np.zeros(table.shape[1], dtype=np.uint64)
    g = start ^ (start >> 1)
    bit = 0
    while g >> bit:
        if (g >> bit) & 1:
            cur ^= high_rows[bit]
        bit += 1
    buf = np.empty_like(table)
    for h in range(start, stop):
        if h != start:
            flip = (h & -h).bit_length() - 1
            cur ^= high_rows[flip]
        np.bitwise_xor(table, cur, out=buf)
        w = np.bitwise_count(buf).sum(axis=1, dtype=np.int64)
        counts += np.bincount(w, minlength=n + 1)
    return counts


def weight_distribution(basis: np.ndarray, threads: Optional[int] = None) -> np.ndarray:
    """Count codewords of every weight in the span of ``basis`` (rows assumed independent).

    The high message bits are split into contiguous Gray-code segments that
    may run on separate threads; the merged counts do not depend on the
    split.
    """
    basis = np.asarray(basis, dtype=np.uint8)
    K, n = basis.shape
    packed = _pack_uint64(basis) if K else np.zeros((0, 1), dtype=np.uint64)
    low = min(K, _TABLE_BITS)
    table = np.zeros((1 << low, packed.shape[1]), dtype=np.uint64)
    for i in range(low):
        half = 1 << i
        np.bitwise_xor(table[:half], packed[i], out=table[half:2 * half])
    high_rows = packed[low:]
    total = 1 << (K - low)
    if threads is None:
        threads = os.cpu_count() or 1
    threads = max(1, min(int(threads), total))
    bounds = [total * t // threads for t in range(threads + 1)]
    if threads == 1:
        return _gray_segment(table, high_rows, 0, total, n)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(
            lambda t: _gray_segment(table, high_rows, bounds[t], bounds[t + 1], n), range(threads)
        )
        return np.sum(list(parts), axis=0)


def exhaustive_min_distance(
    spec: QcCodeSpec, cap: int = DEFAULT_DIMENSION_CAP, threads: Optional[int] = None
) -> CodeReport:
    """Enumerate every codeword and return the full weight distribution."""
    if spec.intended_dimension == 0:
        raise EmptyCodeError("empty code: spec has no generator rows")
    basis = row_basis(generator_matrix(spec))
    K = basis.shape[0]
    if K > cap:
        raise DimensionCapError(
            f"dimension {K} exceeds the exhaustive enumeration cap of {cap}; raise the cap explicitly"
        )
    counts = weight_distribution(basis, threads=threads)
    dist = {int(w): int(c) for w, c in enumerate(counts) if c}
    nonzero = [w for w in dist if w > 0]
    return CodeReport(
        n=spec.n,
        K=K,
        d_min=min(nonzero) if nonzero else None,
        weight_distribution=dist,
        codeword_count=int(counts.sum()),
    )


def two_weight_check(report: CodeReport) -> tuple[bool, tuple[int, ...]]:
    """Whether exactly two distinct nonzero weights occur, plus the nonzero weights."""
    weights = tuple(sorted(w for w, c in report.weight_distribution.items() if w > 0 and c))
    return len(weights) == 2, weights
