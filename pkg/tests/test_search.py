import random
from itertools import product

import pytest

from qcsimplex import data
from qcsimplex.distance import pair_distance_vector, two_gen_formula_distance
from qcsimplex.reproduce import pair_codes
from qcsimplex.search import (
    OffsetTuple,
    SearchBudgetError,
    ThreeGenEvaluator,
    canonicalize_three_gen,
    canonicalize_two_gen,
    search_three_gen,
    search_two_gen,
)


def test_canonicalize_two_gen_examples():
    assert canonicalize_two_gen((0, 1, 2), 7) == (0, 1, 2)
    assert canonicalize_two_gen((3, 4, 5), 7) == (0, 1, 2)


def test_canonicalize_preserves_formula(pair7):
    D = pair_distance_vector(*pair7)
    canon = canonicalize_two_gen((0, 0, 3, 5, 6), 7)
    assert canon[0] == 0 and list(canon) == sorted(canon)
    assert two_gen_formula_distance(D, canon[1:], 3) == 16
    assert two_gen_formula_distance(D, (0, 3, 5, 6), 3) == 16


def test_canonicalize_three_gen():
    assert canonicalize_three_gen((21,), (43,), 127) == ((0, 0), (21, 43))
    # anchoring on the second pair gives (-21, -43) = (106, 84), which is larger
    assert canonicalize_three_gen((106,), (84,), 127) == ((0, 0), (21, 43))


@pytest.mark.parametrize("m", [7, 15, 31])
def test_translation_invariance(m):
    c1, c2 = pair_codes(m)
    D = pair_distance_vector(c1, c2)
    rng = random.Random(m)
    for _ in range(30):
        p = rng.randrange(2, 7)
        full = [0] + [rng.randrange(m) for _ in range(p - 1)]
        c = rng.randrange(m)
        moved = [(x + c) % m for x in full]
        # renormalize so the first block is unshifted again
        rel = [(x - moved[0]) % m for x in moved[1:]]
        assert two_gen_formula_distance(D, full[1:], c1.k) == two_gen_formula_distance(D, rel, c1.k)
        canon = canonicalize_two_gen(full, m)
        assert two_gen_formula_distance(D, canon[1:], c1.k) == two_gen_formula_distance(D, full[1:], c1.k)


def test_three_gen_translation_invariance(triple31):
    ev = ThreeGenEvaluator(*triple31)
    rng = random.Random(0)
    for _ in range(20):
        a = [0] + [rng.randrange(31) for _ in range(2)]
        b = [0] + [rng.randrange(31) for _ in range(2)]
        ca, cb = rng.randrange(31), rng.randrange(31)
        a2 = [(x + ca) % 31 for x in a]
        b2 = [(y + cb) % 31 for y in b]
        assert ev.score(a, b)[0] == ev.score(a2, b2)[0]
        canon = canonicalize_three_gen(a[1:], b[1:], 31)
        ca_, cb_ = [x for x, _ in canon], [y for _, y in canon]
        assert ev.score(ca_, cb_)[0] == ev.score(a, b)[0]


@pytest.mark.parametrize("p", [2, 3, 4])
def test_exhaustive_optimal_against_raw_scan(pair7, p):
    D = pair_distance_vector(*pair7)
    brute = max(two_gen_formula_distance(D, t, 3) for t in product(range(7), repeat=p - 1))
    assert search_two_gen(*pair7, p).d == brute


@pytest.mark.parametrize("p,d,offsets", [(3, 8, (1, 2)), (4, 12, (1, 2, 4)), (5, 16, (0, 3, 5, 6)), (7, 24, (1, 2, 3, 4, 5, 6))])
def test_exhaustive_m7(pair7, p, d, offsets):
    res = search_two_gen(*pair7, p)
    assert res.d == d and res.mode == "exhaustive" and res.complete
    assert res.best == OffsetTuple(offsets)


def test_exhaustive_m15_p2(pair15):
    res = search_two_gen(*pair15, 2)
    assert res.d == 12 and res.best.a == (3,)


def test_exhaustive_budget(pair15):
    with pytest.raises(SearchBudgetError, match="stochastic"):
        search_two_gen(*pair15, 10, budget=1000)


def test_stochastic_deterministic(pair15):
    r1 = search_two_gen(*pair15, 5, mode="stochastic", seed=7)
    r2 = search_two_gen(*pair15, 5, mode="stochastic", seed=7)
    assert r1 == r2
    assert r1.mode == "stochastic" and r1.seed == 7
    D = pair_distance_vector(*pair15)
    assert two_gen_formula_distance(D, r1.best.a, 4) == r1.d == 34


def test_stochastic_budget_flag(pair31):
    r = search_two_gen(*pair31, 5, mode="stochastic", seed=1, budget=50)
    assert not r.complete


@pytest.mark.parametrize("p,m,k,d,offsets", data.TABLE_2GEN)
def test_published_certificates(p, m, k, d, offsets):
    D = pair_distance_vector(*pair_codes(m))
    assert two_gen_formula_distance(D, offsets, k) == d


@pytest.mark.parametrize("p,m,k,d,offsets", [r for r in data.TABLE_2GEN if r[1] <= 15 and r[0] <= 5])
def test_exhaustive_never_below_certificate(p, m, k, d, offsets):
    assert search_two_gen(*pair_codes(m), p).d >= d


def test_search_three_gen_m127(triple127):
    res = search_three_gen(*triple127, 2)
    assert res.d == 104 and res.complete
    ev = ThreeGenEvaluator(*triple127)
    assert ev.score([0, 21], [0, 43])[0] == 104
    assert ev.score([0, *res.best.a], [0, *res.best.b])[0] == 104


def test_search_three_gen_m31_stochastic(triple31):
    res = search_three_gen(*triple31, 3, mode="stochastic", seed=1)
    assert res.d >= 36
    ev = ThreeGenEvaluator(*triple31)
    assert ev.score([0, *res.best.a], [0, *res.best.b])[0] == res.d
    assert search_three_gen(*triple31, 3, mode="stochastic", seed=1) == res


def test_search_three_gen_p1(triple31):
    from qcsimplex.distance import exhaustive_min_distance
    from qcsimplex.qcmodel import build_three_gen

    res = search_three_gen(*triple31, 1)
    assert res.best == OffsetTuple((), ())
    assert res.d == exhaustive_min_distance(build_three_gen(*triple31, (), ())).d_min


def test_search_three_gen_partial(triple31):
    res = search_three_gen(*triple31, 3, budget=100)
    assert not res.complete and res.evaluations == 100
