from collections import Counter

import pytest
from hypothesis import given, strategies as st

from wdg.diagrams import (
    InvalidInput,
    PartitionInput,
    diagram_from_divisors,
    diagram_from_input,
    divisors_from_input,
    enumerate_inputs,
    input_from_divisors,
    is_odd,
    is_special,
    is_special_by_gaps,
    is_special_by_transpose,
    is_special_divisors,
    is_zero,
    odd_sequence,
    partitions,
    phi_d,
    reduce_step,
    reduce_to_odd,
    xi_sequence,
)
from wdg.roots import build_root_system


def all_partitions(total, largest=None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for p in range(min(total, largest), 0, -1):
        for rest in all_partitions(total - p, p):
            yield (p,) + rest


def allowed(lie_type, part):
    """Jordan types of nilpotent orbits: B/D need even parts in pairs, C odd parts."""
    c = Counter(part)
    bad_parity = 0 if lie_type in "BD" else 1
    return all(m % 2 == 0 for x, m in c.items() if x % 2 == bad_parity)


def orbit_count(lie_type, n):
    if lie_type == "A":
        return sum(1 for _ in all_partitions(n + 1))
    total = 2 * n + 1 if lie_type == "B" else 2 * n
    count = 0
    for p in all_partitions(total):
        if allowed(lie_type, p):
            very_even = lie_type == "D" and all(x % 2 == 0 for x in p)
            count += 2 if very_even else 1
    return count


def transpose(p):
    return tuple(sum(1 for x in p if x > i) for i in range(p[0])) if p else ()


def special_oracle(lie_type, part):
    part = tuple(sorted(part, reverse=True))
    if lie_type == "A":
        return True
    if lie_type == "B":
        return allowed("B", transpose(part))
    return allowed("C", transpose(part))


def test_divisors_from_input():
    assert divisors_from_input(PartitionInput("C", 3, (2, 1), ())) == (1, 1, 2, 2)
    assert divisors_from_input(PartitionInput("B", 2, (1,), (3,))) == (1, 1, 3)
    assert divisors_from_input(PartitionInput("A", 2, (2, 1))) == (1, 2)


def test_xi_sequence():
    assert xi_sequence((2, 1)) == (1, 0, -1)
    assert xi_sequence((1, 1, 1)) == (0, 0, 0)
    assert xi_sequence((1, 1, 2, 2)) == (1, 1, 0, 0, -1, -1)


@pytest.mark.parametrize("t,n,mu,nu,weights", [
    ("A", 2, (2, 1), (), (1, 1)),
    ("A", 2, (1, 1, 1), (), (0, 0)),
    ("C", 2, (1,), (1,), (1, 0)),
    ("A", 3, (2, 1, 1), (), (1, 0, 1)),
    ("A", 3, (2, 2), (), (0, 2, 0)),
    ("A", 4, (5,), (), (2, 2, 2, 2)),
    ("C", 3, (), (3,), (2, 2, 2)),
    ("B", 3, (), (7,), (2, 2, 2)),
])
def test_weights(t, n, mu, nu, weights):
    assert diagram_from_input(PartitionInput(t, n, mu, nu)).weights == weights


def test_very_even_variants_swap_fork_weights():
    plus = diagram_from_input(PartitionInput("D", 4, (2, 2), (), "plus")).weights
    minus = diagram_from_input(PartitionInput("D", 4, (2, 2), (), "minus")).weights
    assert plus != minus
    assert plus[:2] == minus[:2] and plus[2:] == minus[2:][::-1]


@pytest.mark.parametrize("t,n", [(t, n) for t in "ABCD" for n in range(3, 7)])
def test_weights_are_dynkin_values(t, n):
    for p in enumerate_inputs(t, n):
        w = diagram_from_input(p).weights
        assert set(w) <= {0, 1, 2}
        assert w == tuple(w)


def test_is_odd():
    d = diagram_from_input(PartitionInput("A", 2, (2, 1)))
    assert is_odd(d)
    assert not is_odd(diagram_from_input(PartitionInput("A", 2, (1, 1, 1))))
    assert not is_odd(diagram_from_input(PartitionInput("A", 3, (3, 1))))


@pytest.mark.parametrize("t,seq,want", [
    ("C", (1, 1, 4, 4), (1, 1, 2, 2)),
    ("A", (1, 3), (1, 1)),
    ("B", (2, 2, 5), (2, 2, 3)),
])
def test_reduce_step(t, seq, want):
    assert reduce_step(t, seq) == want


def test_reduce_to_odd_examples():
    assert reduce_to_odd("C", (1, 1, 2, 2)) == [(1, 1, 2, 2)]
    assert len(reduce_to_odd("A", (1, 5))) - 1 <= 2
    bottom = reduce_to_odd("A", (3, 3))[-1]
    assert all(m == 1 for m in bottom) or is_odd(diagram_from_divisors("A", bottom))


@pytest.mark.parametrize("t,n", [(t, n) for t in "ABCD" for n in range(1, 7) if not (t in "BC" and n < 2 or t == "D" and n < 3)])
def test_enumeration_counts(t, n):
    inputs = enumerate_inputs(t, n)
    assert len(inputs) == orbit_count(t, n)
    assert len({p.label() for p in inputs}) == len(inputs)


def test_a2_b2_counts():
    assert len(enumerate_inputs("A", 2)) == 3
    assert len(enumerate_inputs("B", 2)) == 4


def test_d3_has_no_variants():
    assert all(p.variant is None for p in enumerate_inputs("D", 3))


@pytest.mark.parametrize("t,n", [(t, n) for t in "BCD" for n in range(2, 8) if not (t == "D" and n < 3)])
def test_specialness_matches_transpose_oracle(t, n):
    for p in enumerate_inputs(t, n):
        assert is_special(p) == special_oracle(t, divisors_from_input(p)), p.label()


@pytest.mark.parametrize("t,n", [(t, n) for t in "BCD" for n in range(2, 8) if not (t == "D" and n < 3)])
def test_three_specialness_routes_agree(t, n):
    for p in enumerate_inputs(t, n):
        divs = divisors_from_input(p)
        a = is_special_divisors(t, divs)
        assert a == is_special_by_transpose(t, divs)
        d = diagram_from_input(p)
        if is_odd(d):
            assert a == is_special_by_gaps(odd_sequence(d))


def test_specialness_examples():
    assert all(is_special(p) for p in enumerate_inputs("A", 5))
    assert is_special_divisors("C", (1, 1, 2, 2))
    assert not is_special_divisors("C", (1, 1, 2))


def test_odd_sequences():
    q = odd_sequence(diagram_from_input(PartitionInput("A", 2, (2, 1))))
    assert q.indices == (0, 1, 2, 3)
    q = odd_sequence(diagram_from_divisors("C", (1, 1, 1, 1, 2, 2)))
    assert q.indices == (2,) and q.gaps == (2,)


def test_odd_sequence_needs_odd():
    with pytest.raises(InvalidInput):
        odd_sequence(diagram_from_input(PartitionInput("A", 3, (4,))))


def test_phi_d():
    d = diagram_from_input(PartitionInput("A", 2, (2, 1)))
    assert set(phi_d(d, 1)) == {(1, -1, 0), (0, 1, -1)}
    assert phi_d(d, 2) == [(1, 0, -1)]


@pytest.mark.parametrize("t,n", [("A", 5), ("B", 4), ("C", 4), ("D", 5)])
def test_phi_d_partitions_positive_roots(t, n):
    pos = set(build_root_system(t, n).positive_roots)
    for p in enumerate_inputs(t, n):
        d = diagram_from_input(p)
        layers = [set(phi_d(d, i)) for i in range(1, 4 * n + 2)]
        assert sum(map(len, layers)) == len(set().union(*layers))
        assert set().union(*layers) == {r for r in pos if d.degree(r) > 0}
        assert not phi_d(d, 7) or max(d.degree(r) for r in pos) >= 7


@given(st.sampled_from("BCD").flatmap(lambda t: st.tuples(st.just(t), st.integers(3, 6))))
def test_input_divisor_roundtrip(tn):
    t, n = tn
    for p in enumerate_inputs(t, n):
        assert input_from_divisors(t, divisors_from_input(p), p.variant) == p


@pytest.mark.parametrize("t,n", [(t, n) for t in "ABCD" for n in range(3, 7)])
def test_reduction_preserves_specialness(t, n):
    for p in enumerate_inputs(t, n):
        d = diagram_from_input(p)
        chain = reduce_to_odd(t, divisors_from_input(p))
        if is_odd(d) or is_zero(d):
            assert len(chain) == 1
            continue
        want = is_special(p)
        for divs in chain:
            assert is_special_divisors(t, divs) == want


@pytest.mark.parametrize("bad", [
    dict(lie_type="A", rank=2, mu=(2,)),
    dict(lie_type="C", rank=2, mu=(1,), nu=(1, 1)),
    dict(lie_type="B", rank=2, mu=(1,), nu=(2, 1)),
    dict(lie_type="D", rank=4, mu=(2, 2)),
    dict(lie_type="D", rank=4, mu=(3, 1), variant="plus"),
    dict(lie_type="A", rank=2, mu=(3, 0)),
])
def test_bad_inputs(bad):
    with pytest.raises(InvalidInput):
        PartitionInput(**bad)


def test_partitions_helper():
    assert sorted(partitions(4)) == sorted(all_partitions(4))
