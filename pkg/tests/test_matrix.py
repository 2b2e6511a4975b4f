import json
import random
from functools import reduce as fold

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropmon.errors import ParseError, RangeError, SpecMismatch
from tropmon.matrix import (
    TropMatrix,
    all_matrices,
    identity,
    key_space,
    mat_decode,
    mat_encode,
    mat_format,
    mat_from_json,
    mat_mul,
    mat_parse,
    mat_pow,
    mat_reduce,
    mat_to_json,
    random_matrix,
)
from tropmon.semiring import ABSORB, BOOLEAN, max_plus, min_plus, sr_add, sr_mul

INF = ABSORB


def reference_product(x, y):
    """Matrix product straight from the semiring operations."""
    spec, n = x.spec, x.n
    return TropMatrix(spec, n, tuple(
        fold(lambda acc, v: sr_add(spec, acc, v),
             [sr_mul(spec, x[r, m], y[m, c]) for m in range(n)])
        for r in range(n) for c in range(n)))


def M(spec, *rows):
    return TropMatrix.from_rows(spec, [list(r) for r in rows])


def test_product_examples():
    spec = min_plus()
    B = M(spec, (1, INF), (INF, 0))
    A2 = M(spec, (2, 0), (0, INF))
    Ainf = M(spec, (INF, 0), (0, INF))
    assert mat_mul(B, A2) == M(spec, (3, 1), (0, INF))
    word = [B, B, Ainf, B, B, B]
    assert fold(mat_mul, word) == M(spec, (INF, 2), (3, INF))


def test_identity_examples():
    assert identity(min_plus(), 2) == M(min_plus(), (0, INF), (INF, 0))
    assert identity(max_plus(), 2) == M(max_plus(), (0, INF), (INF, 0))
    assert mat_format(identity(max_plus(), 2)) == "0 -inf; -inf 0"
    assert identity(BOOLEAN, 2) == M(BOOLEAN, (1, 0), (0, 1))


@pytest.mark.parametrize("spec", [min_plus(t) for t in range(3)] + [max_plus(t) for t in range(3)]
                         + [BOOLEAN], ids=str)
def test_identity_neutral_exhaustive(spec):
    e = identity(spec, 2)
    for x in all_matrices(spec, 2):
        assert mat_mul(e, x) == x == mat_mul(x, e)


@pytest.mark.parametrize("spec", [min_plus(t) for t in range(3)] + [max_plus(t) for t in range(3)]
                         + [BOOLEAN], ids=str)
def test_product_matches_reference_and_is_associative(spec):
    rng = random.Random(str(spec))
    mats = all_matrices(spec, 2)
    for _ in range(10_000):
        x, y, z = rng.choice(mats), rng.choice(mats), rng.choice(mats)
        xy = mat_mul(x, y)
        assert xy == reference_product(x, y)
        assert mat_mul(xy, z) == mat_mul(x, mat_mul(y, z))


@pytest.mark.parametrize("spec", [min_plus(0), min_plus(1), max_plus(0), max_plus(1)], ids=str)
def test_associative_3x3(spec):
    rng = random.Random(7)
    for _ in range(2000):
        x, y, z = (random_matrix(spec, 3, rng) for _ in range(3))
        assert mat_mul(mat_mul(x, y), z) == mat_mul(x, mat_mul(y, z))
        assert mat_mul(x, y) == reference_product(x, y)


@pytest.mark.parametrize("family", [min_plus, max_plus])
def test_reduction_commutes_with_product(family):
    rng = random.Random(11)
    inf = family()
    for _ in range(2000):
        n = rng.choice((2, 3))
        x = random_matrix(inf, n, rng, max_entry=20)
        y = random_matrix(inf, n, rng, max_entry=20)
        for t in range(6):
            q = family(t)
            assert mat_reduce(q, mat_mul(x, y)) == mat_mul(mat_reduce(q, x), mat_reduce(q, y))


def test_power():
    spec = min_plus()
    B = M(spec, (1, INF), (INF, 0))
    assert mat_pow(B, 0) == identity(spec, 2)
    assert mat_pow(B, 13) == M(spec, (13, INF), (INF, 0))


def test_encode_examples():
    assert mat_encode(identity(min_plus(0), 2)) == 6
    assert key_space(min_plus(1), 2) == 81


@pytest.mark.parametrize("spec", [min_plus(t) for t in range(3)] + [max_plus(t) for t in range(3)]
                         + [BOOLEAN], ids=str)
def test_encode_bijection(spec):
    size = key_space(spec, 2)
    seen = set()
    for k in range(size):
        m = mat_decode(spec, 2, k)
        assert mat_encode(m) == k
        seen.add(m.entries)
    assert len(seen) == size == spec.carrier_size ** 4


def test_encode_3x3_roundtrip():
    rng = random.Random(3)
    spec = max_plus(2)
    for _ in range(500):
        m = random_matrix(spec, 3, rng)
        assert mat_decode(spec, 3, mat_encode(m)) == m


def test_decode_range():
    with pytest.raises(RangeError):
        mat_decode(min_plus(1), 2, 81)
    with pytest.raises(RangeError):
        mat_decode(min_plus(1), 2, -1)
    with pytest.raises(SpecMismatch):
        mat_encode(identity(min_plus(), 2))


def test_parse_examples():
    spec = min_plus()
    assert mat_parse(spec, 2, "inf 2; 3 inf") == M(spec, (INF, 2), (3, INF))
    assert mat_parse(max_plus(), 2, "0 -inf; -inf 0") == identity(max_plus(), 2)
    with pytest.raises(ParseError):
        mat_parse(spec, 2, "0 1; 2")
    with pytest.raises(ParseError):
        mat_parse(spec, 2, "0 1; 2 x")
    with pytest.raises(ParseError):
        mat_parse(spec, 3, "0 1; 2 3")


@settings(max_examples=200)
@given(st.sampled_from([min_plus(), max_plus(), min_plus(3), max_plus(2), BOOLEAN]),
       st.sampled_from([2, 3]), st.randoms(use_true_random=False))
def test_text_and_json_roundtrip(spec, n, rng):
    m = random_matrix(spec, n, rng, max_entry=10 ** 6)
    assert mat_parse(spec, n, mat_format(m)) == m
    assert mat_from_json(spec, json.loads(json.dumps(mat_to_json(m)))) == m


def test_json_form():
    m = mat_parse(max_plus(), 2, "-inf 3; 0 -inf")
    assert mat_to_json(m) == [["-inf", 3], [0, "-inf"]]
    with pytest.raises(ParseError):
        mat_from_json(max_plus(), [[0, 1], [2]])
    with pytest.raises(ParseError):
        mat_from_json(max_plus(), [[0, 1.5], [2, 0]])


def test_cross_spec_is_an_error():
    a = identity(min_plus(1), 2)
    b = identity(min_plus(2), 2)
    with pytest.raises(SpecMismatch):
        a == b  # noqa: B015
    with pytest.raises(SpecMismatch):
        mat_mul(a, b)
    with pytest.raises(SpecMismatch):
        mat_mul(identity(min_plus(1), 2), identity(min_plus(1), 3))
    assert identity(min_plus(1), 2) != identity(min_plus(1), 3)


def test_invalid_entries_rejected():
    with pytest.raises(ValueError):
        TropMatrix(min_plus(1), 2, (0, 2, 0, 0))
    with pytest.raises(ValueError):
        TropMatrix(min_plus(1), 4, (0,) * 16)


def test_infinite_product_overflow():
    spec = min_plus()
    big = M(spec, (1 << 63, INF), (INF, 0))
    with pytest.raises(OverflowError):
        mat_mul(big, big)
