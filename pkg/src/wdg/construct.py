"""Explicit unimodular lam for every special diagram.

Odd diagrams of types B, C and D are described by their odd sequence
i_1 < ... < i_k of weight-1 nodes, cutting the coordinates into segments
(i_(l-1), i_l] on which the grading is constant, with the tail after i_k in
degree 0.  The recipe puts lam = 1 on

  * gap-matched differences eps_s - eps_t joining segment l to segment l+2,
    with s and t at the same offset inside their segments (l <= k-2);
  * every other consecutive sum eps_j + eps_(j+1) in the last segment;
  * alternating-sign tail roots eps_j +- eps_(i_k + m) for the coordinates j
    of the second-to-last segment that are not absorbed by the differences.

Type D with both fork nodes of weight 1 is the same recipe applied to the
sequence extended by n-1.  Type A uses the orbit classes of construct_a.
Non-odd diagrams are reduced to odd ones and lam is shifted back up.

Every result is checked (det = +-1 over Z); a failed check falls back to
the {0,1} search.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .construct_a import lambda_support_a
from .diagrams import (
    InvalidInput,
    OddSequence,
    WeightedDiagram,
    diagram_from_divisors,
    divisors_from_input,
    is_odd,
    is_special,
    is_special_by_gaps,
    is_zero,
    odd_sequence,
    reduce_to_odd,
)
from .gram import LambdaAssignment, Z, gram_det
from .roots import Root
from .search import DEFAULT_CAP, CapExceeded, search_unimodular


class NotSpecial(InvalidInput):
    pass


@dataclass
class Construction:
    lam: LambdaAssignment
    provenance: str
    det: int

    def to_json(self) -> dict:
        out = self.lam.to_json()
        out["provenance"] = self.provenance
        out["det"] = self.det
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _eps(n: int, *terms: tuple[int, int]) -> Root:
    """Sum of c * eps_i over (c, i) with 1-based i."""
    v = [0] * n
    for c, i in terms:
        v[i - 1] += c
    return tuple(v)


def _require_special(d: WeightedDiagram, q: OddSequence) -> None:
    special = is_special(d.source) if d.source is not None else is_special_by_gaps(q)
    if not special:
        raise NotSpecial(f"{d.lie_type}{d.rank} diagram {d.weights} is not special")


def _runs(s, parity: int, lo: int, hi: int) -> list[tuple[int, int]]:
    """Maximal runs u <= v (step 2, given parity, inside [lo, hi]) with
    s(u-2) < s(u) = s(u+2) = ... = s(v) < s(v+2)."""
    out = []
    for u in range(lo, hi + 1):
        if u % 2 != parity % 2 or not s(u - 2) < s(u):
            continue
        v = u
        while v + 2 <= hi and s(v + 2) == s(u):
            v += 2
        if s(u) < s(v + 2):
            out.append((u, v))
    return out


def _gap_matched(n: int, i, k: int) -> set[Root]:
    out = set()
    for l in range(1, k - 1):
        shift = i(l + 1) - i(l - 1)
        for a in range(1, i(l) + 1):
            t = a + shift
            if i(l + 1) < t <= n:
                out.add(_eps(n, (1, a), (-1, t)))
    return out


def _alternate_sums(n: int, lo: int, hi: int) -> set[Root]:
    """eps_j + eps_(j+1) for j = lo, lo+2, ... below hi."""
    return {_eps(n, (1, j), (1, j + 1)) for j in range(lo, hi, 2)}


def _tail_roots(n: int, omega: list[int], base: int) -> set[Root]:
    return {_eps(n, (1, j), ((-1) ** m, base + (m + 1) // 2)) for m, j in enumerate(omega, 1)}


def _gap_fn(indices: tuple[int, ...]):
    k = len(indices)
    big = 10**9

    def s(l: int) -> int:
        if l < 0:
            return -big
        if l == 0:
            return 0
        if l > k:
            return big
        return indices[l - 1] - (indices[l - 2] if l > 1 else 0)

    return s


def x_sets_c(n: int, indices: tuple[int, ...]) -> set[Root]:
    k = len(indices)
    i = lambda l: indices[l - 1] if l else 0  # noqa: E731
    if k == 1:
        return _alternate_sums(n, 1, i(1) + 1)
    out = _gap_matched(n, i, k)
    out |= _alternate_sums(n, i(k - 1) + 1, i(k))
    base = i(k - 2)
    for j in range(base + 1, i(k - 1) + 1):
        m = j - base
        out.add(_eps(n, (1, j), ((-1) ** m, i(k) + (m + 1) // 2)))
    return out


def x_sets_b(n: int, indices: tuple[int, ...]) -> set[Root]:
    k = len(indices)
    i = lambda l: indices[l - 1] if l else 0  # noqa: E731
    s = _gap_fn(indices)
    out = _gap_matched(n, i, k)
    out |= _alternate_sums(n, i(k - 1) + 1, i(k))
    base = i(k - 2)
    omega = set(range(base + 2, base + s(1) + 1))
    for u, v in _runs(s, 0, 2, k - 2):
        omega |= set(range(base + s(u - 1) + 1, base + s(v + 1) + 1))
    out.add(_eps(n, (1, base + 1)))
    return out | _tail_roots(n, sorted(omega), i(k))


def x_sets_d(n: int, indices: tuple[int, ...]) -> set[Root]:
    """Recipe for type D, sequence taken with the fork nodes in weight 0."""
    k = len(indices)
    i = lambda l: indices[l - 1] if l else 0  # noqa: E731
    if k == 0:
        return set()
    if k == 1:
        return _alternate_sums(n, 1, i(1) + 1)
    s = _gap_fn(indices)
    out = _gap_matched(n, i, k)
    out |= _alternate_sums(n, i(k - 1) + 1, i(k))
    base = i(k - 2)
    omega: set[int] = set()
    # runs start at u = 0 (s_0 = 0) when k is even, at u = 1 when k is odd
    for u, v in _runs(s, k % 2, k % 2, k - 2):
        lo = s(u - 1) if u >= 1 else 0
        omega |= set(range(base + lo + 1, base + s(v + 1) + 1))
    return out | _tail_roots(n, sorted(omega), i(k))


def _odd_checked(d: WeightedDiagram, lie_type: str) -> OddSequence:
    if d.lie_type != lie_type:
        raise InvalidInput(f"type {lie_type} diagram expected, got {d.lie_type}")
    if not is_odd(d):
        raise InvalidInput("the explicit recipes need an odd diagram")
    q = odd_sequence(d)
    _require_special(d, q)
    return q


def _assignment(support) -> LambdaAssignment:
    return LambdaAssignment(Z, {r: 1 for r in support})


def construct_type_A(d: WeightedDiagram) -> LambdaAssignment:
    _odd_checked(d, "A")
    return _assignment(lambda_support_a(d))


def construct_type_B(d: WeightedDiagram) -> LambdaAssignment:
    q = _odd_checked(d, "B")
    return _assignment(x_sets_b(d.rank, q.indices))


def construct_type_C(d: WeightedDiagram) -> LambdaAssignment:
    q = _odd_checked(d, "C")
    return _assignment(x_sets_c(d.rank, q.indices))


def _excluded_search(d: WeightedDiagram) -> LambdaAssignment | None:
    try:
        return search_unimodular(d, DEFAULT_CAP)
    except CapExceeded:
        return None


def construct_type_D(d: WeightedDiagram) -> LambdaAssignment:
    """Type D recipe; the 2^(2m) 1^2 family goes through the search first."""
    q = _odd_checked(d, "D")
    if q.excluded:
        found = _excluded_search(d)
        if found is not None:
            return found
    indices = q.indices + ((d.rank - 1,) if q.d_case == "case1" else ())
    return _assignment(x_sets_d(d.rank, indices))


_RECIPES = {
    "A": ("orbit-sums", construct_type_A),
    "B": ("x-sets-b", construct_type_B),
    "C": ("x-sets-c", construct_type_C),
    "D": ("x-sets-d", construct_type_D),
}


def _construct_odd(d: WeightedDiagram, cap: int) -> Construction:
    name, fn = _RECIPES[d.lie_type]
    lam = fn(d)
    if d.lie_type == "D" and odd_sequence(d).excluded and lam == _excluded_search(d):
        name = "search"
    det = gram_det(d, lam)
    if det in (1, -1):
        return Construction(lam, name, det)
    found = search_unimodular(d, cap)
    if found is None:
        raise AssertionError(f"no unimodular lam found for {d.lie_type}{d.rank} {d.weights}")
    return Construction(found, "search", gram_det(d, found))


def lift(lam: LambdaAssignment, lie_type: str, rank: int) -> LambdaAssignment:
    """Embed lam from a reduced diagram into rank `rank`.

    Reduction removes the coordinates with the largest grading values (and
    for type A their mirrors at the bottom), so the reduced coordinates sit
    in a contiguous window of the big ones.
    """
    out = {}
    for r, v in lam.values.items():
        if lie_type == "A":
            pad = (rank + 1 - len(r)) // 2
            out[(0,) * pad + r + (0,) * pad] = v
        else:
            out[(0,) * (rank - len(r)) + r] = v
    return LambdaAssignment(lam.ring, out)


def construct_lambda(d: WeightedDiagram, cap: int = DEFAULT_CAP) -> Construction:
    """A unimodular lam for any special diagram built from partition data."""
    if is_zero(d):
        return Construction(LambdaAssignment(Z, {}), "empty", 1)
    if is_odd(d):
        return _construct_odd(d, cap)
    if d.source is None:
        raise InvalidInput("lifting needs a diagram built from partition data")
    if not is_special(d.source):
        raise NotSpecial(f"{d.source.label()} is not special")
    chain = reduce_to_odd(d.lie_type, divisors_from_input(d.source))
    bottom = chain[-1]
    if all(m == 1 for m in bottom):
        lam, name = LambdaAssignment(Z, {}), "empty"
    else:
        small = diagram_from_divisors(d.lie_type, bottom, d.source.variant)
        if is_zero(small):
            lam, name = LambdaAssignment(Z, {}), "empty"
        else:
            inner = _construct_odd(small, cap)
            lam, name = inner.lam, inner.provenance
    lam = lift(lam, d.lie_type, d.rank)
    det = gram_det(d, lam)
    if det not in (1, -1):
        raise AssertionError(f"lifted lam is not unimodular for {d.source.label()}")
    return Construction(lam, f"lifted:{name}", det)


__all__ = [
    "Construction",
    "NotSpecial",
    "construct_lambda",
    "construct_type_A",
    "construct_type_B",
    "construct_type_C",
    "construct_type_D",
    "lift",
    "x_sets_b",
    "x_sets_c",
    "x_sets_d",
]
