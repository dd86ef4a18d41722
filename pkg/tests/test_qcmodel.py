import json
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcsimplex.gf2poly import CyclicWord, shift_mul
from qcsimplex.qcmodel import (
    CirculantRowGroup,
    QcCodeSpec,
    SpecFormatError,
    build_one_gen,
    build_three_gen,
    build_two_gen,
    code_dimension,
    encode,
    extend_with_block_parity,
    extend_with_unit_rows,
    generator_matrix,
    gf2_rank,
    spec_from_dict,
    spec_to_dict,
)
from qcsimplex.reproduce import extended_spec, pair_codes, simplex, three_gen_spec, triple_codes


def bits(s):
    return np.array([int(c) for c in s], dtype=np.uint8)


def test_build_two_gen_example(ex1):
    spec = build_two_gen(*ex1, (1, 2))
    assert (spec.m, spec.p, spec.n, spec.intended_dimension) == (7, 3, 21, 6)
    assert spec.groups[0].shifts == (0, 0, 0)
    assert spec.groups[1].shifts == (0, 1, 2)


def test_build_two_gen_single_block(ex1):
    spec = build_two_gen(*ex1, ())
    assert (spec.p, spec.n, spec.intended_dimension) == (1, 7, 6)


def test_build_two_gen_mismatch(ex1, pair15):
    with pytest.raises(ValueError, match="mismatched"):
        build_two_gen(ex1[0], pair15[0], (1,))
    with pytest.raises(ValueError, match="outside"):
        build_two_gen(*ex1, (7,))


def test_build_three_gen_shapes(triple31, triple127):
    s = build_three_gen(*triple31, (1, 18), (30, 2))
    assert (s.n, s.intended_dimension) == (93, 15)
    assert s.groups[2].shifts == (0, 30, 2)
    s = build_three_gen(*triple127, (21,), (43,))
    assert (s.n, s.intended_dimension) == (254, 21)
    with pytest.raises(ValueError):
        build_three_gen(*triple31, (1, 18), (30,))


def test_group_shift_normalization(ex1):
    g = CirculantRowGroup(ex1[1], (3, 4, 5))
    assert g.shifts == (0, 1, 2)


def test_extend_with_unit_rows():
    base = three_gen_spec("93_15_36")
    ext = extend_with_unit_rows(base, [(1, 1, 0), (1, 0, 1)])
    assert ext.intended_dimension == 17
    assert ext.raw_rows[0] == (1,) * 62 + (0,) * 31
    assert extend_with_unit_rows(base, []) == base
    with pytest.raises(ValueError):
        extend_with_unit_rows(base, [(1, 0)])


def test_extend_with_block_parity():
    base = extended_spec("93_17_34")
    ext = extend_with_block_parity(base)
    assert ext.n == 96 and ext.block_length == 32
    with pytest.raises(ValueError, match="already"):
        extend_with_block_parity(ext)


def test_parity_bits_zero_when_blocks_even(ex1):
    # every simplex codeword has even weight, so no parity bit is ever set
    spec = extend_with_block_parity(build_two_gen(*ex1, (1, 2)))
    G = generator_matrix(spec)
    assert not G[:, 7::8].any()


def test_encode_zero(ex1):
    spec = build_two_gen(*ex1, (1, 2))
    assert not encode(spec, [0] * 6).any()


def test_encode_first_generator_only(ex1):
    spec = build_two_gen(*ex1, (1, 2))
    cw = encode(spec, [1, 0, 0, 0, 0, 0])
    assert np.array_equal(cw, bits("1011100" * 3))
    assert cw.sum() == 12


def test_encode_both_generators(ex1, pair7):
    # literal labels: block j is g1 + x^a(j) g2
    spec = build_two_gen(*ex1, (1, 2))
    cw = encode(spec, [1, 0, 0, 1, 0, 0])
    g1, g2 = ex1[0].word, ex1[1].word
    expected = "".join((g1 ^ shift_mul(g2, a)).to_str() for a in (0, 1, 2))
    assert np.array_equal(cw, bits(expected))
    assert cw.sum() == 8
    # generator order matching the printed distance vector: weight is D[0] + D[1] + D[2]
    cw = encode(build_two_gen(*pair7, (1, 2)), [1, 0, 0, 1, 0, 0])
    assert cw.sum() == 2 + 4 + 4


def test_encode_wrong_length(ex1):
    with pytest.raises(ValueError):
        encode(build_two_gen(*ex1, (1, 2)), [1, 0])


def test_generator_matrix_one_gen(ex1):
    G = generator_matrix(build_one_gen(ex1[0]))
    assert G.shape == (3, 7)
    w = ex1[0].word
    for r in range(3):
        assert np.array_equal(G[r], shift_mul(w, r).to_array())


def test_generator_matrix_shapes(ex1):
    assert generator_matrix(build_two_gen(*ex1, (1, 2))).shape == (6, 21)
    G = generator_matrix(extended_spec("93_17_34"))
    assert G.shape == (17, 93)
    assert np.array_equal(G[15], bits("1" * 62 + "0" * 31))
    assert np.array_equal(G[16], bits("1" * 31 + "0" * 31 + "1" * 31))


@pytest.mark.parametrize(
    "name,expected", [("93_17_34", 17), ("96_17_36", 17), ("254_23_102", 23)]
)
def test_code_dimension_records(name, expected):
    assert code_dimension(extended_spec(name)) == expected


def test_code_dimension_example(ex1):
    assert code_dimension(build_two_gen(*ex1, (1, 2))) == 6


def test_code_dimension_duplicate_group(ex1):
    c = ex1[0]
    assert code_dimension(build_two_gen(c, c, (0, 0))) == 3


def test_gf2_rank_small():
    assert gf2_rank(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2
    assert gf2_rank(np.eye(4, dtype=np.uint8)) == 4


def _rotate_blocks(cw, m, p):
    out = cw.copy()
    for j in range(p):
        out[j * m:(j + 1) * m] = np.roll(cw[j * m:(j + 1) * m], 1)
    return out


@pytest.mark.parametrize("offsets", [(1, 2), (0, 3, 5, 6), (1, 2, 4)])
def test_qc_closure(pair7, offsets):
    spec = build_two_gen(*pair7, offsets)
    G = generator_matrix(spec)
    rank = gf2_rank(G)
    rng = random.Random(1)
    for _ in range(10):
        msg = [rng.randrange(2) for _ in range(spec.intended_dimension)]
        rotated = _rotate_blocks(encode(spec, msg), spec.m, spec.p)
        assert gf2_rank(np.vstack([G, rotated])) == rank


def test_qc_closure_three_gen():
    spec = three_gen_spec("93_15_36")
    G = generator_matrix(spec)
    rotated = _rotate_blocks(G[7], 31, 3)
    assert gf2_rank(np.vstack([G, rotated])) == 15


SPECS = {
    "example": lambda: build_two_gen(*pair_codes(7), (1, 2)),
    "93_17_34": lambda: extended_spec("93_17_34"),
    "96_17_36": lambda: extended_spec("96_17_36"),
}


@pytest.mark.parametrize("name", sorted(SPECS))
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_encode_linear_and_matches_matrix(name, data):
    spec = SPECS[name]()
    K = spec.intended_dimension
    m1 = np.array(data.draw(st.lists(st.integers(0, 1), min_size=K, max_size=K)), dtype=np.uint8)
    m2 = np.array(data.draw(st.lists(st.integers(0, 1), min_size=K, max_size=K)), dtype=np.uint8)
    c1, c2 = encode(spec, m1), encode(spec, m2)
    assert np.array_equal(encode(spec, m1 ^ m2), c1 ^ c2)
    G = generator_matrix(spec)
    assert np.array_equal((m1.astype(int) @ G) % 2, c1)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=17, max_size=17))
def test_block_parity_even(msg):
    spec = extended_spec("96_17_36")
    cw = encode(spec, msg)
    assert (cw.reshape(3, 32).sum(axis=1) % 2 == 0).all()


def test_spec_json_round_trip():
    for name in ("93_17_34", "96_17_36", "254_23_102"):
        spec = extended_spec(name)
        text = json.dumps(spec_to_dict(spec))
        assert spec_from_dict(json.loads(text)) == spec


def test_spec_json_field_names():
    d = spec_to_dict(three_gen_spec("93_15_36"))
    assert set(d) == {"m", "p", "groups", "raw_rows", "block_parity"}
    assert d["groups"][1] == {"k": 5, "generator_octal": "454761565", "shifts": [0, 1, 18]}


@pytest.mark.parametrize(
    "mutate,field",
    [
        (lambda d: d.pop("m"), "'m'"),
        (lambda d: d["groups"][0].pop("generator_octal"), "generator_octal"),
        (lambda d: d["groups"][0].update(generator_octal="9"), "generator_octal"),
        (lambda d: d["groups"][1].update(shifts=[0, 1]), "shifts"),
        (lambda d: d["groups"][1].update(shifts=[0, 1, 99]), "shifts"),
        (lambda d: d.update(raw_rows=["01"]), "raw_rows"),
        (lambda d: d.update(block_parity="yes"), "block_parity"),
        (lambda d: d["groups"][0].update(k=4), r"groups\[0\]"),
    ],
)
def test_spec_from_dict_diagnostics(mutate, field):
    d = spec_to_dict(three_gen_spec("93_15_36"))
    mutate(d)
    with pytest.raises(SpecFormatError, match=field):
        spec_from_dict(d)
