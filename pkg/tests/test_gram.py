import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wdg.chevalley import realize_basis
from wdg.diagrams import PartitionInput, diagram_from_divisors, diagram_from_input, enumerate_inputs, phi_d
from wdg.gram import (
    GF2,
    CoefficientRing,
    LambdaAssignment,
    Z,
    build_gram,
    check_assignment,
    det_exact,
    gram_det,
    gram_structure,
    is_unimodular,
)
from wdg.linalg import det_bareiss


def gram_oracle(d, lam):
    """G[a][b] = lam([e_a, e_b]) from matrix commutators."""
    basis = realize_basis(d.lie_type, d.rank)
    deg1 = sorted(phi_d(d, 1))
    out = []
    for a in deg1:
        row = []
        for b in deg1:
            ea, eb = basis.matrix(a), basis.matrix(b)
            coords = basis.decompose(ea @ eb - eb @ ea) if any(x + y for x, y in zip(a, b)) else {}
            row.append(sum(c * lam.get(r) for r, c in coords.items()))
        out.append(row)
    return deg1, out


def random_lambda(d, rng, lo=-3, hi=3):
    targets = gram_structure(d).targets
    return LambdaAssignment(Z, {r: int(v) for r, v in zip(targets, rng.integers(lo, hi + 1, len(targets)))})


def test_a2_single_entry():
    d = diagram_from_input(PartitionInput("A", 2, (2, 1)))
    g = build_gram(d, LambdaAssignment(Z, {(1, 0, -1): 1}))
    assert g.size == 2
    c = g.entries[0][1]
    assert c in (1, -1) and g.entries == [[0, c], [-c, 0]]
    assert is_unimodular(d, LambdaAssignment(Z, {(1, 0, -1): 1}))


def test_zero_lambda_gives_zero_matrix():
    d = diagram_from_divisors("C", (1, 1, 2, 2))
    g = build_gram(d, LambdaAssignment(Z, {}))
    assert not any(any(r) for r in g.entries)
    assert not is_unimodular(d, LambdaAssignment(Z, {}))


def test_c2_long_root_vanishes_mod_2():
    d = diagram_from_input(PartitionInput("C", 2, (1,), (1,)))
    assert d.weights == (1, 0)
    g = build_gram(d, LambdaAssignment(GF2, {(2, 0): 1}))
    assert g.size == 2 and g.entries == [[0, 0], [0, 0]]
    over_z = build_gram(d, LambdaAssignment(Z, {(2, 0): 1}))
    assert {abs(x) for r in over_z.entries for x in r} == {0, 2}


def test_det_exact_small_cases():
    d = diagram_from_input(PartitionInput("A", 2, (1, 1, 1)))
    assert gram_det(d, LambdaAssignment(Z, {})) == 1  # empty matrix


@pytest.mark.parametrize("t,n", [("A", 4), ("B", 3), ("C", 3), ("D", 4), ("B", 4), ("C", 4)])
def test_gram_matches_commutator_oracle(t, n):
    rng = np.random.default_rng(n)
    for p in enumerate_inputs(t, n):
        d = diagram_from_input(p)
        lam = random_lambda(d, rng)
        g = build_gram(d, lam)
        order, want = gram_oracle(d, lam)
        idx = [g.order.index(r) for r in order]
        got = [[g.entries[i][j] for j in idx] for i in idx]
        assert got == want, p.label()


@pytest.mark.parametrize("t,n", [("B", 4), ("C", 4), ("D", 4)])
def test_gram_is_alternating(t, n):
    rng = np.random.default_rng(0)
    for p in enumerate_inputs(t, n):
        d = diagram_from_input(p)
        size = gram_structure(d).size
        e = np.array(build_gram(d, random_lambda(d, rng)).entries, dtype=np.int64).reshape(size, size)
        assert not (e + e.T).any() and not e.diagonal().any()


def test_odd_order_gram_is_singular():
    rng = np.random.default_rng(5)
    for t, n in [("B", 4), ("C", 5)]:
        for p in enumerate_inputs(t, n):
            d = diagram_from_input(p)
            if gram_structure(d).size % 2:
                assert gram_det(d, random_lambda(d, rng)) == 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31))
def test_gf2_det_is_integer_det_mod_2(seed):
    rng = np.random.default_rng(seed)
    d = diagram_from_divisors("C", (1, 1, 1, 1, 2, 2, 3, 3))
    lam = random_lambda(d, rng)
    reduced = LambdaAssignment(GF2, {r: v & 1 for r, v in lam.values.items()})
    assert gram_det(d, reduced) == gram_det(d, lam) % 2


def test_gf2k_embeds_gf2():
    d = diagram_from_divisors("B", (1, 1, 2, 2, 3))
    rng = np.random.default_rng(1)
    lam = random_lambda(d, rng, 0, 1)
    a = gram_det(d, LambdaAssignment(GF2, lam.values))
    b = gram_det(d, LambdaAssignment(CoefficientRing("GF2k", 16), lam.values))
    assert a == b


def test_pfaffian_square():
    # an alternating integer matrix has a square determinant
    rng = np.random.default_rng(2)
    for p in enumerate_inputs("C", 4):
        d = diagram_from_input(p)
        det = gram_det(d, random_lambda(d, rng))
        assert det >= 0 and round(det ** 0.5) ** 2 == det


def test_assignment_outside_degree_two_rejected():
    d = diagram_from_input(PartitionInput("A", 2, (2, 1)))
    with pytest.raises(ValueError):
        check_assignment(d, LambdaAssignment(Z, {(1, -1, 0): 1}))


def test_ring_parse_and_values():
    assert CoefficientRing.parse("z") == Z
    assert CoefficientRing.parse("GF2") == GF2
    assert CoefficientRing.parse("gf2k:8") == CoefficientRing("GF2k", 8)
    with pytest.raises(ValueError):
        CoefficientRing.parse("q")
    with pytest.raises(ValueError):
        LambdaAssignment(GF2, {(1, 0, -1): 2})


def test_lambda_json_roundtrip():
    lam = LambdaAssignment(CoefficientRing("GF2k", 8), {(1, 0, -1): 7, (0, 1, 1): 200})
    assert LambdaAssignment.from_json(lam.to_json()) == lam


def test_det_bareiss_agrees_on_gram():
    d = diagram_from_divisors("D", (1, 1, 3, 3))
    lam = random_lambda(d, np.random.default_rng(9))
    g = build_gram(d, lam)
    assert det_exact(g) == det_bareiss(g.entries)
