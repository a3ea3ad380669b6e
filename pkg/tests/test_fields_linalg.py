import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wdg.fields import GF2k, is_irreducible
from wdg.linalg import det_bareiss, det_gf2, det_gf2_batch, det_mod_p, pack_rows, rank_gf2


def det_fraction(rows):
    """Plain Gaussian elimination over the rationals, as an oracle."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return int(det)


square = st.integers(0, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


@given(square)
def test_bareiss_matches_rational_elimination(rows):
    assert det_bareiss(rows) == (det_fraction(rows) if rows else 1)


@given(square)
def test_det_mod_p(rows):
    if rows:
        assert det_mod_p(rows, 7) == det_fraction(rows) % 7


@given(square)
def test_gf2_det_is_parity_of_integer_det(rows):
    if rows:
        assert det_gf2(rows) == det_fraction(rows) % 2


def test_small_dets():
    assert det_bareiss([[0, 1], [-1, 0]]) == 1
    assert det_bareiss([]) == 1
    assert det_gf2([[0, 1, 0], [1, 0, 0], [0, 0, 0]]) == 0


def test_rank_gf2():
    assert rank_gf2([[1, 1], [1, 1]]) == 1
    assert rank_gf2([[0, 1], [1, 0]]) == 2
    assert rank_gf2(np.zeros((3, 3), dtype=np.uint8)) == 0


def test_batch_matches_scalar():
    rng = np.random.default_rng(1)
    n = 6
    mats = rng.integers(0, 2, size=(200, n, n))
    packed = np.array([pack_rows(m) for m in mats], dtype=np.uint64)
    got = det_gf2_batch(packed, n)
    assert [int(x) for x in got] == [det_gf2(m) for m in mats]


@pytest.mark.parametrize("k", [2, 3, 8, 16, 32, 64])
def test_default_modulus_irreducible(k):
    f = GF2k(k)
    assert is_irreducible(f.modulus)


@settings(max_examples=50)
@given(st.integers(1, 2**16 - 1), st.integers(0, 2**16 - 1), st.integers(0, 2**16 - 1))
def test_field_axioms(a, b, c):
    f = GF2k(16)
    assert f.mul(a, f.inv(a)) == 1
    assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))


def test_multiplicative_group_order():
    f = GF2k(8)
    for a in (2, 3, 0x53):
        assert f.pow(a, 255) == 1


def test_vmul_matches_scalar():
    f = GF2k(32)
    rng = np.random.default_rng(2)
    a, b = f.random(rng, 100), f.random(rng, 100)
    assert [int(x) for x in f.vmul(a, b)] == [f.mul(int(x), int(y)) for x, y in zip(a, b)]


def test_field_det_np_matches_scalar():
    f = GF2k(16)
    rng = np.random.default_rng(3)
    for n in range(1, 6):
        m = f.random(rng, (n, n))
        assert f.det_np(m) == f.det(m.tolist())


def test_field_det_permutation_expansion():
    f = GF2k(8)
    rng = np.random.default_rng(4)
    m = f.random(rng, (4, 4)).tolist()
    total = 0
    for perm in itertools.permutations(range(4)):
        term = 1
        for i, j in enumerate(perm):
            term = f.mul(term, m[i][j])
        total ^= term
    assert f.det(m) == total
