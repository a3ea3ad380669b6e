"""Faithful maps for odd diagrams of types B, C and D.

Coordinates are cut into segments by the odd sequence; for type D with both
fork nodes of weight 1 the sequence is extended by n-1 so that the last
segment is [i_k + 1, n-1] and eps_n sits alone in degree 0.  Y_l collects the
degree-1 roots whose leading coordinate is in segment l.

A lam is faithful when every degree-2 root eps_s - eps_t joining segment l to
segment l+2 that lam does not kill satisfies t - s <= i_(l+1) - i_(l-1).  For
faithful lam the Gram matrix is block triangular after reordering, which
gives det G = +-(prod det M_l)^2 det M_k.

The two moves rho and swap are automorphisms of the Lie algebra that fix the
grading: conjugation by 1 - g E (E a degree-0 root matrix) and by the
permutation matrix exchanging two coordinates of one segment.  The new lam
is lam composed with the inverse automorphism, so the Gram matrix only
changes by a unimodular change of basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .chevalley import _positions, realize_basis
from .diagrams import InvalidInput, WeightedDiagram, is_odd, odd_sequence, phi_d
from .gram import GramMatrix, LambdaAssignment, Z, build_gram
from .linalg import det_bareiss
from .roots import Root

FAITHFUL_TYPES = ("B", "C", "D")


def chain(d: WeightedDiagram) -> tuple[int, ...]:
    """The odd sequence, extended by n-1 for type D with weight-1 fork nodes."""
    if d.lie_type not in FAITHFUL_TYPES:
        raise InvalidInput("faithful maps are defined for types B, C and D")
    if not is_odd(d):
        raise InvalidInput("faithful maps need an odd diagram")
    q = odd_sequence(d)
    if q.d_case == "case1":
        return q.indices + (d.rank - 1,)
    return q.indices


def _i(ch, l: int) -> int:
    return ch[l - 1] if l else 0


def segment(ch, coord: int) -> int:
    """Segment number (1-based) of a coordinate; len(ch)+1 for the tail."""
    for l, top in enumerate(ch, 1):
        if coord <= top:
            return l
    return len(ch) + 1


def _leading(root: Root) -> int:
    return next(i for i, x in enumerate(root, 1) if x > 0)


def _as_difference(root: Root) -> tuple[int, int] | None:
    """(s, t) when root = eps_s - eps_t, else None."""
    nz = [(i, c) for i, c in enumerate(root, 1) if c]
    if len(nz) == 2 and nz[0][1] == 1 and nz[1][1] == -1:
        return nz[0][0], nz[1][0]
    return None


def _bridging(d: WeightedDiagram, ch, l: int) -> list[Root]:
    """Degree-2 roots eps_s - eps_t with s in segment l and t in segment l+2."""
    out = []
    for r in phi_d(d, 2):
        st = _as_difference(r)
        if st and segment(ch, st[0]) == l and segment(ch, st[1]) == l + 2:
            out.append(r)
    return out


def omega_window(d: WeightedDiagram, l: int) -> list[Root]:
    """Omega_l: degree-2 differences eps_s - eps_t with t - s <= i_(l+1) - i_(l-1)."""
    ch = chain(d)
    bound = _i(ch, l + 1) - _i(ch, l - 1)
    out = []
    for r in phi_d(d, 2):
        st = _as_difference(r)
        if st and st[1] - st[0] <= bound:
            out.append(r)
    return out


def _check_k(ch, least: int) -> None:
    if len(ch) < least:
        raise InvalidInput(f"needs an odd sequence of length >= {least}, got {len(ch)}")


def offending(d: WeightedDiagram, lam: LambdaAssignment) -> list[tuple[int, Root]]:
    """(l, root) for every root in the support of lam that breaks faithfulness."""
    ch = chain(d)
    out = []
    for l in range(1, len(ch) - 1):
        bound = _i(ch, l + 1) - _i(ch, l - 1)
        for r in _bridging(d, ch, l):
            s, t = _as_difference(r)
            if lam.get(r) and t - s > bound:
                out.append((l, r))
    return out


def is_faithful(d: WeightedDiagram, lam: LambdaAssignment) -> bool:
    _check_k(chain(d), 3)
    return not offending(d, lam)


# -- the two moves ---------------------------------------------------------


def _moved_coords(d: WeightedDiagram, l: int, s: int, t: int) -> tuple[int, int]:
    """Validate (l, s, t) and return the moved coordinates s+1, t+1.

    The indices follow e_(s,t) = e(eps_s - eps_(t+1)), so s, t range over
    [i_l, i_(l+1) - 1] and the coordinates actually moved are s+1 and t+1,
    both in segment l+1.
    """
    ch = chain(d)
    _check_k(ch, 2)
    if not 1 <= l <= len(ch) - 1:
        raise InvalidInput(f"l must lie in [1, {len(ch) - 1}]")
    lo, hi = _i(ch, l), _i(ch, l + 1) - 1
    if not (lo <= s <= hi and lo <= t <= hi) or s == t:
        raise InvalidInput(f"s, t must be distinct in [{lo}, {hi}]")
    return s + 1, t + 1


def _unit_matrix(d: WeightedDiagram, p: int, q: int) -> np.ndarray:
    """Root matrix of eps_p - eps_q."""
    v = [0] * d.rank
    v[p - 1], v[q - 1] = 1, -1
    return realize_basis(d.lie_type, d.rank).matrix(tuple(v))


def _permutation(d: WeightedDiagram, p: int, q: int) -> np.ndarray:
    pos, size = _positions(realize_basis(d.lie_type, d.rank).system)
    perm = np.eye(size, dtype=np.int64)
    for a, b in ((p, q), (-p, -q)):
        i, j = pos[a], pos[b]
        perm[[i, j]] = perm[[j, i]]
    return perm


@lru_cache(maxsize=None)
def _pullback(lie_type: str, rank: int, weights: tuple, kind: str, p: int, q: int):
    """For each degree-2 root b, the expansion of Psi^{-1}(e_b) as
    {root: (c0, c1, c2)} meaning c0 + c1*g + c2*g^2 (rho) or {root: (c0,)}."""
    d = WeightedDiagram(lie_type, rank, weights)
    basis = realize_basis(lie_type, rank)
    out = {}
    if kind == "rho":
        # conjugation by 1 - g e(eps_p - eps_q) matches the sign of the
        # displayed update e(eps_a - eps_p) -> e(eps_a - eps_p) + g e(eps_a - eps_q)
        m = -_unit_matrix(d, p, q)
        for b in phi_d(d, 2):
            y = basis.matrix(b)
            parts = [basis.decompose(y), basis.decompose(-(m @ y - y @ m)), basis.decompose(-(m @ y @ m))]
            roots = set().union(*parts)
            out[b] = {r: tuple(part.get(r, 0) for part in parts) for r in roots}
    else:
        perm = _permutation(d, p, q)
        for b in phi_d(d, 2):
            out[b] = {r: (c,) for r, c in basis.decompose(perm @ basis.matrix(b) @ perm.T).items()}
    return out


def _pull(lam: LambdaAssignment, table, gamma: int) -> LambdaAssignment:
    ring = lam.ring
    powers = [1, gamma, ring.mul(gamma, gamma)] if ring.kind != "Z" else [1, gamma, gamma * gamma]
    vals = {}
    for b, expansion in table.items():
        acc = 0
        for r, coeffs in expansion.items():
            v = lam.get(r)
            if not v:
                continue
            c = 0
            for cj, pw in zip(coeffs, powers):
                if ring.kind == "Z":
                    c += cj * pw
                elif cj & 1:
                    c ^= pw
            acc = acc + c * v if ring.kind == "Z" else acc ^ ring.mul(c, v)
        vals[b] = acc
    return LambdaAssignment(ring, vals)


def apply_rho(d: WeightedDiagram, lam: LambdaAssignment, l: int, s: int, t: int, gamma: int) -> LambdaAssignment:
    """lam composed with the inverse of conjugation by 1 - gamma E, where
    E = e(eps_p - eps_q), p = s+1, q = t+1.

    The automorphism sends e(eps_a - eps_p) to e(eps_a - eps_p) + gamma
    e(eps_a - eps_q), so lam'(eps_a - eps_p) = lam(eps_a - eps_p) - gamma
    lam(eps_a - eps_q) one level down and lam'(eps_q - eps_b) =
    lam(eps_q - eps_b) + gamma lam(eps_p - eps_b) one level up.
    """
    p, q = _moved_coords(d, l, s, t)
    gamma = lam.ring.check_value(gamma) if lam.ring.kind != "Z" else int(gamma)
    if not gamma:
        return LambdaAssignment(lam.ring, dict(lam.values))
    return _pull(lam, _pullback(d.lie_type, d.rank, d.weights, "rho", p, q), gamma)


def apply_swap(d: WeightedDiagram, lam: LambdaAssignment, l: int, s: int, t: int) -> LambdaAssignment:
    """lam composed with the coordinate exchange p = s+1 <-> q = t+1."""
    p, q = _moved_coords(d, l, s, t)
    return _pull(lam, _pullback(d.lie_type, d.rank, d.weights, "swap", p, q), 0)


# -- faithfulization -------------------------------------------------------


def _first_offender(d: WeightedDiagram, lam: LambdaAssignment):
    bad = offending(d, lam)
    if not bad:
        return None
    return min(bad, key=lambda lr: _as_difference(lr[1]))


def faithfulize(d: WeightedDiagram, lam: LambdaAssignment, max_steps: int = 100000) -> LambdaAssignment:
    """A faithful lam' with the same |det G|, reached by rho and swap moves.

    The offending root eps_s - eps_t with the smallest (s, t) is cleared
    against its partner eps_s - eps_t' at t' = s + i_(l+1) - i_(l-1), which
    lies in the window.  Over Z this runs the Euclidean algorithm on the two
    values; over a field one rho step suffices.
    """
    ch = chain(d)
    _check_k(ch, 3)
    ring = lam.ring
    steps = 0
    while True:
        found = _first_offender(d, lam)
        if found is None:
            return lam
        l, root = found
        s, t = _as_difference(root)
        t2 = s + _i(ch, l + 1) - _i(ch, l - 1)
        partner = _eps_diff(d.rank, s, t2)
        # both t and t2 sit in segment l+2, moved by the level-(l+1) maps
        args = (l + 1, t - 1, t2 - 1)
        sign = _rho_sign(d, args, root, partner)
        while lam.get(root):
            steps += 1
            if steps > max_steps:
                raise AssertionError("faithfulize did not terminate")
            x, y = lam.get(root), lam.get(partner)
            if not y:
                lam = apply_swap(d, lam, *args)
                continue
            if ring.kind == "Z":
                g = -sign * (x // y) if abs(x) >= abs(y) else 0
                if g:
                    lam = apply_rho(d, lam, *args, g)
                else:
                    lam = apply_swap(d, lam, *args)
            else:
                g = ring.mul(x, ring.field.inv(y)) if ring.kind == "GF2k" else 1
                lam = apply_rho(d, lam, *args, g)


def _eps_diff(n: int, s: int, t: int) -> Root:
    v = [0] * n
    v[s - 1], v[t - 1] = 1, -1
    return tuple(v)


def _rho_sign(d: WeightedDiagram, args, root: Root, partner: Root) -> int:
    """c with rho^g(lam)(root) = lam(root) + c g lam(partner)."""
    probe = LambdaAssignment(Z, {partner: 1})
    return apply_rho(d, probe, *args, 1).get(root)


# -- the Y / P / Q partition and the determinant factorization -------------


@dataclass
class PQPartition:
    chain: tuple[int, ...]
    y_sets: list[list[Root]]
    q_sets: list[list[Root]]
    p_sets: list[list[Root]]

    @property
    def k(self) -> int:
        return len(self.chain)

    def final_block(self) -> list[Root]:
        """Index set Q_(k-1) then Y_k of the last block M_k."""
        return self.q_sets[-1] + self.y_sets[-1]

    def closed_form_size(self, l: int) -> int:
        """|P_l| = |Q_l| from the gaps alone."""
        ch = self.chain
        s = lambda j: (_i(ch, j) - _i(ch, j - 1)) if j >= 1 else 0  # noqa: E731
        if l % 2 == 0:
            return sum((s(2 * j + 1) - s(2 * j - 1)) * s(2 * j) for j in range(1, l // 2 + 1))
        return sum((s(2 * j) - s(2 * j - 2)) * s(2 * j - 1) for j in range(1, (l + 1) // 2 + 1))


def pq_partition(d: WeightedDiagram) -> PQPartition:
    ch = chain(d)
    _check_k(ch, 2)
    k = len(ch)
    deg1 = phi_d(d, 1)
    y_sets = [[r for r in deg1 if segment(ch, _leading(r)) == l] for l in range(1, k + 1)]
    if sum(map(len, y_sets)) != len(deg1):
        raise AssertionError("Y sets do not cover the degree-1 roots")
    q_sets = [list(y_sets[0])]
    p_sets = []
    for l in range(1, k - 1):
        window = set(omega_window(d, l))
        q_l = q_sets[-1]
        p_l = [a for a in y_sets[l] if any(tuple(x + y for x, y in zip(a, b)) in window for b in q_l)]
        p_sets.append(p_l)
        q_sets.append([a for a in y_sets[l] if a not in p_l])
        if len(p_l) != len(q_l):
            raise AssertionError(f"|P_{l}| = {len(p_l)} but |Q_{l}| = {len(q_l)}")
    return PQPartition(ch, y_sets, q_sets, p_sets)


def _submatrix(g: GramMatrix, rows: list[Root], cols: list[Root]) -> list[list[int]]:
    idx = {r: i for i, r in enumerate(g.order)}
    return [[g.entries[idx[a]][idx[b]] for b in cols] for a in rows]


@dataclass
class Factorization:
    blocks: list[list[list[int]]]
    final: list[list[int]]
    block_dets: list[int]
    final_det: int
    gram_det: int

    @property
    def identity_holds(self) -> bool:
        prod = 1
        for x in self.block_dets:
            prod *= x
        return abs(self.gram_det) == abs(prod * prod * self.final_det)


def factor_determinant(d: WeightedDiagram, lam: LambdaAssignment) -> Factorization:
    if lam.ring.kind != "Z":
        raise InvalidInput("the factorization is evaluated over the integers")
    part = pq_partition(d)
    if part.k >= 3 and not is_faithful(d, lam):
        raise InvalidInput("lam is not faithful")
    g = build_gram(d, lam)
    blocks = [_submatrix(g, q, p) for q, p in zip(part.q_sets, part.p_sets)]
    final_roots = part.final_block()
    final = _submatrix(g, final_roots, final_roots)
    return Factorization(
        blocks,
        final,
        [det_bareiss(b) for b in blocks],
        det_bareiss(final),
        det_bareiss(g.entries) if g.size else 1,
    )


__all__ = [
    "FAITHFUL_TYPES",
    "Factorization",
    "PQPartition",
    "apply_rho",
    "apply_swap",
    "chain",
    "factor_determinant",
    "faithfulize",
    "is_faithful",
    "offending",
    "omega_window",
    "pq_partition",
    "segment",
]
