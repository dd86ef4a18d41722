"""Generator-matrix model for g-generator quasi-cyclic codes.

A code is described by circulant row groups (a simplex generator plus one
shift per block), optional raw rows given as explicit bit patterns, and an
optional per-block overall parity bit. Codewords are laid out block-major:
block 0 first, coefficient of ``x^0`` first inside a block, parity bit (if
any) last inside its block.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Iterable, Sequence

import numpy as np

from .gf2poly import CyclicWord, Gf2Poly, format_octal, parse_octal, shift_mul
from .simplex import SimplexCode, SimplexError

__all__ = [
    "CirculantRowGroup",
    "QcCodeSpec",
    "SpecFormatError",
    "build_one_gen",
    "build_two_gen",
    "build_three_gen",
    "extend_with_unit_rows",
    "extend_with_block_parity",
    "encode",
    "generator_matrix",
    "code_dimension",
    "gf2_rank",
    "spec_to_dict",
    "spec_from_dict",
]


class SpecFormatError(ValueError):
    """Malformed spec description; the message names the offending field."""


@dataclass(frozen=True)
class CirculantRowGroup:
    """One simplex generator repeated across blocks with per-block shifts.

    Shifts are normalized so that the first block is unshifted; a common
    shift of every block spans the same row space.
    """

    base: SimplexCode
    shifts: tuple[int, ...]

    def __post_init__(self):
        if not self.shifts:
            raise ValueError("a row group needs at least one block")
        m = self.base.m
        s0 = self.shifts[0]
        object.__setattr__(self, "shifts", tuple((s - s0) % m for s in self.shifts))

    @property
    def p(self) -> int:
        return len(self.shifts)


@dataclass(frozen=True)
class QcCodeSpec:
    m: int
    p: int
    groups: tuple[CirculantRowGroup, ...] = ()
    raw_rows: tuple[tuple[int, ...], ...] = ()
    block_parity: bool = False

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        object.__setattr__(self, "raw_rows", tuple(tuple(int(b) for b in r) for r in self.raw_rows))
        for i, grp in enumerate(self.groups):
            if grp.base.m != self.m:
                raise ValueError(f"group {i} has m={grp.base.m}, spec has m={self.m}")
            if grp.p != self.p:
                raise ValueError(f"group {i} has {grp.p} blocks, spec has p={self.p}")
        for i, row in enumerate(self.raw_rows):
            if len(row) != self.m * self.p:
                raise ValueError(f"raw row {i} has length {len(row)}, expected {self.m * self.p}")
            if any(b not in (0, 1) for b in row):
                raise ValueError(f"raw row {i} is not a 0/1 pattern")

    @property
    def block_length(self) -> int:
        return self.m + 1 if self.block_parity else self.m

    @property
    def n(self) -> int:
        return self.block_length * self.p

    @property
    def intended_dimension(self) -> int:
        return sum(g.base.k for g in self.groups) + len(self.raw_rows)

    def describe(self) -> str:
        return f"[{self.n}, {self.intended_dimension}] QC code, m={self.m}, p={self.p}"


def _check_offsets(offsets: Sequence[int], m: int, p: int | None, name: str) -> tuple[int, ...]:
    offsets = tuple(int(a) for a in offsets)
    if p is not None and len(offsets) != p - 1:
        raise ValueError(f"{name} needs p - 1 = {p - 1} offsets, got {len(offsets)}")
    for a in offsets:
        if not 0 <= a < m:
            raise ValueError(f"{name} offset {a} outside [0, {m})")
    return offsets


def build_one_gen(c: SimplexCode, shifts: Sequence[int] = (0,)) -> QcCodeSpec:
    shifts = tuple(shifts)
    return QcCodeSpec(m=c.m, p=len(shifts), groups=(CirculantRowGroup(c, shifts),))


def build_two_gen(c1: SimplexCode, c2: SimplexCode, offsets: Sequence[int]) -> QcCodeSpec:
    """Rows ``[G1 G1 ... G1 ; G2 G2,1 ... G2,p-1]`` with ``G2,i`` generated by ``x^a(i) g2``."""
    if c1.m != c2.m:
        raise ValueError(f"mismatched block length: {c1.m} vs {c2.m}")
    offsets = _check_offsets(offsets, c1.m, None, "a")
    p = len(offsets) + 1
    return QcCodeSpec(
        m=c1.m,
        p=p,
        groups=(CirculantRowGroup(c1, (0,) * p), CirculantRowGroup(c2, (0,) + offsets)),
    )


def build_three_gen(
    c1: SimplexCode, c2: SimplexCode, c3: SimplexCode, a: Sequence[int], b: Sequence[int]
) -> QcCodeSpec:
    if not c1.m == c2.m == c3.m:
        raise ValueError(f"mismatched block lengths: {c1.m}, {c2.m}, {c3.m}")
    m = c1.m
    a = _check_offsets(a, m, None, "a")
    b = _check_offsets(b, m, len(a) + 1, "b")
    p = len(a) + 1
    return QcCodeSpec(
        m=m,
        p=p,
        groups=(
            CirculantRowGroup(c1, (0,) * p),
            CirculantRowGroup(c2, (0,) + a),
            CirculantRowGroup(c3, (0,) + b),
        ),
    )


def extend_with_unit_rows(spec: QcCodeSpec, patterns: Iterable[Sequence[bool]]) -> QcCodeSpec:
    """Append one row per pattern: all-ones blocks where the flag is set, zero blocks elsewhere."""
    rows = list(spec.raw_rows)
    for pat in patterns:
        pat = [bool(x) for x in pat]
        if len(pat) != spec.p:
            raise ValueError(f"pattern {pat} has length {len(pat)}, expected p={spec.p}")
        row = []
        for flag in pat:
            row.extend([int(flag)] * spec.m)
        rows.append(tuple(row))
    return replace(spec, raw_rows=tuple(rows))


def extend_with_block_parity(spec: QcCodeSpec) -> QcCodeSpec:
    """Append one overall parity position to every length-m block."""
    if spec.block_parity:
        raise ValueError("spec already carries block parity")
    return replace(spec, block_parity=True)


def _block_words(spec: QcCodeSpec, message: Sequence[int]) -> list[int]:
    """Per-block packed integers (bit i = coefficient of x^i) before parity."""
    m, p = spec.m, spec.p
    blocks = [0] * p
    pos = 0
    for grp in spec.groups:
        k = grp.base.k
        u = 0
        for i in range(k):
            if message[pos + i]:
                u |= 1 << i
        pos += k
        if u == 0:
            continue
        w = grp.base.encode(Gf2Poly(u))
        for j, s in enumerate(grp.shifts):
            blocks[j] ^= shift_mul(w, s).bits
    for row in spec.raw_rows:
        if message[pos]:
            for j in range(p):
                chunk = row[j * m:(j + 1) * m]
                blocks[j] ^= CyclicWord.from_bits(chunk).bits
        pos += 1
    return blocks


def encode(spec: QcCodeSpec, message: Sequence[int]) -> np.ndarray:
    """Encode a message of ``intended_dimension`` bits into a 0/1 ``uint8`` codeword.

    Message layout: ``k_i`` coefficient bits of u_i(x) per group (x^0 first),
    then one bit per raw row.
    """
    message = [int(b) & 1 for b in message]
    if len(message) != spec.intended_dimension:
        raise ValueError(f"message has {len(message)} bits, expected {spec.intended_dimension}")
    m, bl = spec.m, spec.block_length
    out = np.zeros(spec.n, dtype=np.uint8)
    for j, word in enumerate(_block_words(spec, message)):
        base = j * bl
        for i in range(m):
            out[base + i] = (word >> i) & 1
        if spec.block_parity:
            out[base + m] = word.bit_count() & 1
    return out


def generator_matrix(spec: QcCodeSpec) -> np.ndarray:
    K = spec.intended_dimension
    rows = np.zeros((K, spec.n), dtype=np.uint8)
    for r in range(K):
        unit = [0] * K
        unit[r] = 1
        rows[r] = encode(spec, unit)
    return rows


def _pack_rows(matrix: np.ndarray) -> list[int]:
    out = []
    for row in np.asarray(matrix, dtype=np.uint8):
        v = 0
        for i in np.flatnonzero(row):
            v |= 1 << int(i)
        out.append(v)
    return out


def gf2_rank(matrix: np.ndarray) -> int:
    """Rank over GF(2) by elimination on packed rows."""
    pivots: dict[int, int] = {}
    for v in _pack_rows(matrix):
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                break
            v ^= pivots[top]
    return len(pivots)


def code_dimension(spec: QcCodeSpec) -> int:
    return gf2_rank(generator_matrix(spec))


def _bits_str(row: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in row)


def spec_to_dict(spec: QcCodeSpec) -> dict[str, Any]:
    return {
        "m": spec.m,
        "p": spec.p,
        "groups": [
            {"k": g.base.k, "generator_octal": format_octal(g.base.g), "shifts": list(g.shifts)}
            for g in spec.groups
        ],
        "raw_rows": [_bits_str(r) for r in spec.raw_rows],
        "block_parity": spec.block_parity,
    }


def _need(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise SpecFormatError(f"{where}: missing field '{key}'")
    val = obj[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise SpecFormatError(f"{where}: field '{key}' must be an integer")
    if kind is not int and not isinstance(val, kind):
        raise SpecFormatError(f"{where}: field '{key}' must be {kind.__name__}")
    return val


def spec_from_dict(obj: Any) -> QcCodeSpec:
    if not isinstance(obj, dict):
        raise SpecFormatError("spec: expected a JSON object")
    m = _need(obj, "m", int, "spec")
    p = _need(obj, "p", int, "spec")
    if m < 1 or p < 1:
        raise SpecFormatError("spec: fields 'm' and 'p' must be positive")
    groups_raw = obj.get("groups", [])
    if not isinstance(groups_raw, list):
        raise SpecFormatError("spec: field 'groups' must be a list")
    groups = []
    for i, g in enumerate(groups_raw):
        where = f"groups[{i}]"
        if not isinstance(g, dict):
            raise SpecFormatError(f"{where}: expected an object")
        k = _need(g, "k", int, where)
        octal = _need(g, "generator_octal", str, where)
        shifts = _need(g, "shifts", list, where)
        if len(shifts) != p or not all(isinstance(s, int) and not isinstance(s, bool) for s in shifts):
            raise SpecFormatError(f"{where}: field 'shifts' must be {p} integers")
        try:
            base = SimplexCode(k=k, g=parse_octal(octal))
        except (SimplexError, ValueError) as exc:
            raise SpecFormatError(f"{where}: field 'generator_octal': {exc}") from exc
        if base.m != m:
            raise SpecFormatError(f"{where}: field 'k' gives m={base.m}, spec has m={m}")
        if any(not 0 <= s < m for s in shifts):
            raise SpecFormatError(f"{where}: field 'shifts' entries must lie in [0, {m})")
        groups.append(CirculantRowGroup(base, tuple(shifts)))
    raw = obj.get("raw_rows", [])
    if not isinstance(raw, list):
        raise SpecFormatError("spec: field 'raw_rows' must be a list")
    rows = []
    for i, r in enumerate(raw):
        if not isinstance(r, str) or len(r) != m * p or set(r) - {"0", "1"}:
            raise SpecFormatError(f"raw_rows[{i}]: expected a 0/1 string of length {m * p}")
        rows.append(tuple(int(c) for c in r))
    parity = obj.get("block_parity", False)
    if not isinstance(parity, bool):
        raise SpecFormatError("spec: field 'block_parity' must be a boolean")
    return QcCodeSpec(m=m, p=p, groups=tuple(groups), raw_rows=tuple(rows), block_parity=parity)
