import numpy as np
import pytest

from wdg.chevalley import (
    ChevalleyBasis,
    cartan_pairing,
    coroot_failures,
    form_matrix,
    jacobi_failures,
    realize_basis,
    string_failures,
)
from wdg.roots import build_root_system

SMALL = [("A", 1), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4)]


def test_a2_bracket():
    b = realize_basis("A", 2)
    r = b.bracket((1, -1, 0), (0, 1, -1))
    assert abs(r.coefficient) == 1 and r.sum_root == (1, 0, -1)
    r = b.bracket((1, -1, 0), (1, 0, -1))
    assert r.coefficient == 0 and r.sum_root is None


def test_c3_bracket():
    r = realize_basis("C", 3).bracket((1, 0, -1), (0, 1, 1))
    assert abs(r.coefficient) == 1 and r.sum_root == (1, 1, 0)


def test_b2_long_string():
    # eps2 - eps1 string through eps1: eps2 and eps2 - eps1... r = 1 gives |N| = 2
    b = realize_basis("B", 2)
    assert abs(b.coefficient((1, 0), (0, 1))) == 2


def test_bracket_rejects_opposite_roots():
    b = realize_basis("A", 2)
    with pytest.raises(ValueError):
        b.bracket((1, -1, 0), (-1, 1, 0))


@pytest.mark.parametrize("t,n", SMALL)
def test_matrices_preserve_form(t, n):
    b = realize_basis(t, n)
    j = form_matrix(t, n)
    for r, e in b.vectors.items():
        if t != "A":
            assert not (e.T @ j + j @ e).any(), r
        assert e.dtype.kind == "i"


@pytest.mark.parametrize("t,n", SMALL)
def test_root_vectors_are_weight_vectors(t, n):
    b = realize_basis(t, n)
    s = build_root_system(t, n)
    for a in s.simple_roots:
        h = b.matrix(a) @ b.matrix(tuple(-x for x in a)) - b.matrix(tuple(-x for x in a)) @ b.matrix(a)
        for r, e in b.vectors.items():
            assert np.array_equal(h @ e - e @ h, cartan_pairing(r, a) * e)


@pytest.mark.parametrize("t,n", SMALL)
def test_structure_constants_sound(t, n):
    b = realize_basis(t, n)
    assert jacobi_failures(b) == []
    assert string_failures(b) == []
    assert coroot_failures(b) == []


def test_checks_catch_a_flipped_sign():
    good = realize_basis("C", 3)
    bad = ChevalleyBasis(good.system)
    key = next(iter(bad._table))
    bad._table[key] = -bad._table[key]
    assert jacobi_failures(bad)
    assert string_failures(bad)


def test_decompose_roundtrip():
    b = realize_basis("B", 3)
    combo = {r: i - 4 for i, r in enumerate(b.system.roots[:8])}
    m = sum(c * b.matrix(r) for r, c in combo.items())
    assert b.decompose(m) == {r: c for r, c in combo.items() if c}


def test_decompose_rejects_cartan():
    b = realize_basis("A", 2)
    with pytest.raises(ValueError):
        b.decompose(np.diag([1, -1, 0]))
