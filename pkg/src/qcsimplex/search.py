"""Offset search for 2- and 3-generator constructions.

Candidates are scored by the closed-form distance evaluators. Exhaustive
mode walks canonical representatives only; stochastic mode is seeded
single-coordinate hill climbing with random restarts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Optional, Sequence

import numpy as np

from .distance import pair_distance_vector, triple_distance_table
from .simplex import SimplexCode

__all__ = [
    "OffsetTuple",
    "SearchResult",
    "SearchBudgetError",
    "TwoGenEvaluator",
    "ThreeGenEvaluator",
    "canonicalize_two_gen",
    "canonicalize_three_gen",
    "search_two_gen",
    "search_three_gen",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 1_000_000
EXHAUSTIVE = "exhaustive"
STOCHASTIC = "stochastic"


class SearchBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class OffsetTuple:
    a: tuple[int, ...]
    b: Optional[tuple[int, ...]] = None

    def to_dict(self) -> dict:
        out = {"a": list(self.a)}
        if self.b is not None:
            out["b"] = list(self.b)
        return out


@dataclass(frozen=True)
class SearchResult:
    best: OffsetTuple
    d: int
    evaluations: int
    mode: str
    seed: Optional[int] = None
    complete: bool = True

    def to_dict(self) -> dict:
        return {
            "best": self.best.to_dict(),
            "d": self.d,
            "evaluations": self.evaluations,
            "mode": self.mode,
            "seed": self.seed,
            "complete": self.complete,
        }


def canonicalize_two_gen(offsets: Sequence[int], m: int) -> tuple[int, ...]:
    """Lexicographically smallest sorted translate (mod m) that starts at 0.

    ``offsets`` is the full multiset including the implicit leading 0.
    """
    vals = [x % m for x in offsets]
    if not vals:
        return ()
    return min(tuple(sorted((x - c) % m for x in vals)) for c in set(vals))


def canonicalize_three_gen(
    a: Sequence[int], b: Sequence[int], m: int
) -> tuple[tuple[int, int], ...]:
    """Canonical multiset of per-block ``(a, b)`` pairs, implicit ``(0, 0)`` included.

    Uses the independent translations of the ``a`` and ``b`` tuples (one pair
    is moved to ``(0, 0)``) together with block reordering.
    """
    pairs = [(0, 0)] + [(x % m, y % m) for x, y in zip(a, b)]
    return min(
        tuple(sorted(((x - ax) % m, (y - by) % m) for x, y in pairs)) for ax, by in set(pairs)
    )


class TwoGenEvaluator:
    """Scores offset tuples against a fixed distance vector."""

    def __init__(self, c1: SimplexCode, c2: SimplexCode):
        D = pair_distance_vector(c1, c2)
        self.m = c1.m
        self.k = c1.k
        self.D = D
        # rows[s][j] = D[(j + s) mod m]
        self.rows = np.stack([np.roll(D.values, -s) for s in range(self.m)])

    def score(self, full: Sequence[int]) -> tuple[int, int]:
        """``(distance, -multiplicity of the minimum)`` for shifts including the leading 0."""
        sums = self.rows[list(full)].sum(axis=0)
        single = len(full) * (1 << (self.k - 1))
        lo = int(sums.min())
        if single < lo:
            return single, -2
        mult = int(np.count_nonzero(sums == lo)) + (1 if single == lo else 0)
        return lo, -mult


class ThreeGenEvaluator:
    def __init__(self, c1: SimplexCode, c2: SimplexCode, c3: SimplexCode):
        self.m = c1.m
        self.k = c1.k
        self.D12 = pair_distance_vector(c1, c2)
        self.D13 = pair_distance_vector(c1, c3)
        self.D23 = pair_distance_vector(c2, c3)
        self.D123 = triple_distance_table(c1, c2, c3)
        m = self.m
        self._r12 = np.stack([np.roll(self.D12.values, -s) for s in range(m)])
        self._r13 = np.stack([np.roll(self.D13.values, -s) for s in range(m)])
        self._r23 = np.stack([np.roll(self.D23.values, -s) for s in range(m)])
        self._t = self.D123.d

    def _table_term(self, a: Sequence[int], b: Sequence[int]) -> np.ndarray:
        m = self.m
        acc = np.zeros_like(self._t)
        for x, y in zip(a, b):
            acc += np.roll(self._t, (-x % m, -y % m), axis=(0, 1))
        return acc

    def score(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, int]:
        """``a`` and ``b`` include the leading 0."""
        m = self.m
        diff = [(y - x) % m for x, y in zip(a, b)]
        parts = [
            self._r12[list(a)].sum(axis=0),
            self._r13[list(b)].sum(axis=0),
            self._r23[diff].sum(axis=0),
            self._table_term(a, b).ravel(),
        ]
        single = len(a) * (1 << (self.k - 1))
        lo = min(single, min(int(x.min()) for x in parts))
        mult = sum(int(np.count_nonzero(x == lo)) for x in parts) + (1 if single == lo else 0)
        return lo, -mult


def _better(score, key, best_score, best_key) -> bool:
    if best_score is None:
        return True
    if score[0] != best_score[0]:
        return score[0] > best_score[0]
    return key < best_key


def search_two_gen(
    c1: SimplexCode,
    c2: SimplexCode,
    p: int,
    mode: str = EXHAUSTIVE,
    seed: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    restarts: int = 20,
) -> SearchResult:
    if p < 2:
        raise ValueError("search needs p >= 2")
    if c1.m != c2.m:
        raise ValueError(f"mismatched block length: {c1.m} vs {c2.m}")
    ev = TwoGenEvaluator(c1, c2)
    m = ev.m
    if mode == EXHAUSTIVE:
        size = comb(m + p - 2, p - 1)
        if size > budget:
            raise SearchBudgetError(
                f"exhaustive search over {size} offset multisets exceeds budget {budget}; "
                "use stochastic mode or raise the budget"
            )
        best = best_d = None
        evals = 0
        # combinations_with_replacement yields sorted tuples in lexicographic order,
        # so the first maximizer seen is the tie-break winner.
        for rest in combinations_with_replacement(range(m), p - 1):
            full = (0,) + rest
            if canonicalize_two_gen(full, m) != full:
                continue
            d = ev.score(full)[0]
            evals += 1
            if best_d is None or d > best_d:
                best, best_d = full, d
        return SearchResult(OffsetTuple(best[1:]), best_d, evals, EXHAUSTIVE, seed)
    if mode != STOCHASTIC:
        raise ValueError(f"unknown search mode {mode!r}")

    rng = random.Random(seed)
    evals = 0
    best_score = best_key = None
    complete = True
    for _ in range(restarts):
        cur = [rng.randrange(m) for _ in range(p - 1)]
        cur_score = ev.score([0] + cur)
        evals += 1
        while True:
            step = None
            for pos in range(p - 1):
                for v in range(m):
                    if v == cur[pos]:
                        continue
                    cand = cur.copy()
                    cand[pos] = v
                    s = ev.score([0] + cand)
                    evals += 1
                    if s > cur_score and (step is None or s > step[0]):
                        step = (s, cand)
            if step is None or evals >= budget:
                break
            cur_score, cur = step
        key = canonicalize_two_gen([0] + cur, m)
        if _better(cur_score, key, best_score, best_key):
            best_score, best_key = cur_score, key
        if evals >= budget:
            complete = False
            break
    return SearchResult(OffsetTuple(best_key[1:]), best_score[0], evals, STOCHASTIC, seed, complete)


def search_three_gen(
    c1: SimplexCode,
    c2: SimplexCode,
    c3: SimplexCode,
    p: int,
    mode: str = EXHAUSTIVE,
    seed: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    restarts: int = 20,
) -> SearchResult:
    """Maximize the 3-generator formula distance over ``(a, b)`` offset tuples.

    When the budget runs out the best tuple seen so far is returned with
    ``complete=False``.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if not c1.m == c2.m == c3.m:
        raise ValueError(f"mismatched block lengths: {c1.m}, {c2.m}, {c3.m}")
    ev = ThreeGenEvaluator(c1, c2, c3)
    m = ev.m

    def unpack(canon):
        # canon[0] is (0, 0) for every canonical form
        return tuple(x for x, _ in canon[1:]), tuple(y for _, y in canon[1:])

    if p == 1:
        d = ev.score([0], [0])[0]
        return SearchResult(OffsetTuple((), ()), d, 1, mode, seed)

    if mode == EXHAUSTIVE:
        best = best_d = None
        evals = 0
        complete = True
        for rest in combinations_with_replacement(range(m * m), p - 1):
            pairs = ((0, 0),) + tuple(divmod(r, m) for r in rest)
            a = [x for x, _ in pairs[1:]]
            b = [y for _, y in pairs[1:]]
            if canonicalize_three_gen(a, b, m) != pairs:
                continue
            if evals >= budget:
                complete = False
                break
            d = ev.score([0] + a, [0] + b)[0]
            evals += 1
            if best_d is None or d > best_d:
                best, best_d = pairs, d
        ba, bb = unpack(best)
        return SearchResult(OffsetTuple(ba, bb), best_d, evals, EXHAUSTIVE, seed, complete)
    if mode != STOCHASTIC:
        raise ValueError(f"unknown search mode {mode!r}")

    rng = random.Random(seed)
    evals = 0
    best_score = best_key = None
    complete = True
    for _ in range(restarts):
        cur = [rng.randrange(m) for _ in range(2 * (p - 1))]
        cur_score = ev.score([0] + cur[: p - 1], [0] + cur[p - 1:])
        evals += 1
        while evals < budget:
            step = None
            for pos in range(len(cur)):
                for v in range(m):
                    if v == cur[pos]:
                        continue
                    cand = cur.copy()
                    cand[pos] = v
                    s = ev.score([0] + cand[: p - 1], [0] + cand[p - 1:])
                    evals += 1
                    if s > cur_score and (step is None or s > step[0]):
                        step = (s, cand)
            if step is None:
                break
            cur_score, cur = step
        key = canonicalize_three_gen(cur[: p - 1], cur[p - 1:], m)
        if _better(cur_score, key, best_score, best_key):
            best_score, best_key = cur_score, key
        if evals >= budget:
            complete = False
            break
    ba, bb = unpack(best_key)
    return SearchResult(OffsetTuple(ba, bb), best_score[0], evals, STOCHASTIC, seed, complete)
