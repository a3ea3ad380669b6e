"""Chevalley basis of the classical Lie algebras via explicit matrix models.

Type A uses sl_{n+1}.  Types B and D use so_N for the symmetric form with
antidiagonal Gram matrix (for B the middle entry is 2, which makes the short
root vectors integral with the right normalisation).  Type C uses sp_{2n}
for the antidiagonal form with +1 above and -1 below the antidiagonal.
Basis vector e_r of a root r is an integer matrix; brackets are read off
from matrix commutators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .roots import Root, RootSystem, add, build_root_system


@dataclass(frozen=True)
class BracketResult:
    coefficient: int
    sum_root: Root | None


class ChevalleyBasis:
    def __init__(self, system: RootSystem):
        self.system = system
        self.vectors: dict[Root, np.ndarray] = {r: _root_matrix(system, r) for r in system.roots}
        self._table: dict[tuple[Root, Root], int] = {}
        self._fill_table()

    def _fill_table(self) -> None:
        sys_ = self.system
        for a in sys_.roots:
            ea = self.vectors[a]
            for b in sys_.roots:
                s = add(a, b)
                if not sys_.is_root(s):
                    continue
                eb = self.vectors[b]
                comm = ea @ eb - eb @ ea
                es = self.vectors[s]
                k = np.flatnonzero(es)[0]
                coef, rem = divmod(int(comm.flat[k]), int(es.flat[k]))
                if rem or not np.array_equal(comm, coef * es):
                    raise AssertionError(f"[e{a}, e{b}] is not a multiple of e{s}")
                self._table[(a, b)] = coef

    def matrix(self, root: Root) -> np.ndarray:
        return self.vectors[tuple(root)]

    def decompose(self, m: np.ndarray) -> dict[Root, int]:
        """Coordinates of a matrix with zero diagonal in the root vectors."""
        if not hasattr(self, "_pivots"):
            self._pivots = {}
            for r, e in self.vectors.items():
                k = int(np.flatnonzero(e)[0])
                self._pivots[r] = (k, int(e.flat[k]))
        out = {}
        rest = np.array(m, dtype=np.int64, copy=True)
        for r, (k, c) in self._pivots.items():
            v = int(rest.flat[k])
            if v:
                coef, rem = divmod(v, c)
                if rem:
                    raise ValueError(f"matrix is not an integral combination at root {r}")
                out[r] = coef
                rest -= coef * self.vectors[r]
        if rest.any():
            raise ValueError("matrix is not a combination of root vectors")
        return out

    def coefficient(self, a: Root, b: Root) -> int:
        """N_{a,b}; zero when a + b is not a root."""
        return self._table.get((tuple(a), tuple(b)), 0)

    def bracket(self, a: Root, b: Root) -> BracketResult:
        a, b = tuple(a), tuple(b)
        if not (self.system.is_root(a) and self.system.is_root(b)):
            raise ValueError(f"{a} or {b} is not a root")
        s = add(a, b)
        if not any(s):
            raise ValueError("bracket of opposite roots lands in the Cartan subalgebra")
        if (a, b) in self._table:
            return BracketResult(self._table[(a, b)], s)
        return BracketResult(0, None)


def realize_basis(system: RootSystem | str, rank: int | None = None) -> ChevalleyBasis:
    """Chevalley basis of a root system, or of (lie_type, rank)."""
    if isinstance(system, RootSystem):
        return _realize(system.lie_type, system.rank)
    return _realize(system, rank)


@lru_cache(maxsize=None)
def _realize(lie_type: str, rank: int) -> ChevalleyBasis:
    return ChevalleyBasis(build_root_system(lie_type, rank, strict=False))


def bracket(basis: ChevalleyBasis, a: Root, b: Root) -> BracketResult:
    return basis.bracket(a, b)


def _positions(system: RootSystem):
    """Map signed coordinate labels to matrix indices and return the size."""
    n = system.rank
    if system.lie_type == "A":
        return {i: i - 1 for i in range(1, n + 2)}, n + 1
    size = 2 * n + 1 if system.lie_type == "B" else 2 * n
    pos = {}
    for i in range(1, n + 1):
        pos[i] = i - 1
        pos[-i] = size - i
    if system.lie_type == "B":
        pos[0] = n
    return pos, size


def _root_matrix(system: RootSystem, root: Root) -> np.ndarray:
    pos, size = _positions(system)
    m = np.zeros((size, size), dtype=np.int64)

    def put(p, q, c):
        m[pos[p], pos[q]] += c

    nz = [(i + 1, c) for i, c in enumerate(root) if c]
    t = system.lie_type
    if t == "A":
        (i, _), (j, _) = nz
        if root[i - 1] > 0:
            put(i, j, 1)
        else:
            put(j, i, 1)
        return m
    if len(nz) == 2:
        (i, ci), (j, cj) = nz
        sign_sym = 1 if t == "C" else -1
        if ci > 0 and cj < 0:
            put(i, j, 1)
            put(-j, -i, -1)
        elif ci < 0 and cj > 0:
            put(j, i, 1)
            put(-i, -j, -1)
        elif ci > 0:
            put(i, -j, 1)
            put(j, -i, sign_sym)
        else:
            put(-j, i, 1)
            put(-i, j, sign_sym)
        return m
    ((i, c),) = nz
    if t == "B":
        if c > 0:
            put(i, 0, 2)
            put(0, -i, -1)
        else:
            put(0, i, 1)
            put(-i, 0, -2)
    else:
        if c > 0:
            put(i, -i, 1)
        else:
            put(-i, i, 1)
    return m


def form_matrix(lie_type: str, rank: int) -> np.ndarray:
    """Gram matrix J of the bilinear form preserved by the matrix model."""
    system = build_root_system(lie_type, rank)
    pos, size = _positions(system)
    if lie_type == "A":
        return np.eye(size, dtype=np.int64)
    j = np.zeros((size, size), dtype=np.int64)
    for i in range(1, rank + 1):
        j[pos[i], pos[-i]] = 1
        j[pos[-i], pos[i]] = -1 if lie_type == "C" else 1
    if lie_type == "B":
        j[pos[0], pos[0]] = 2
    return j


# -- soundness of the structure constants ------------------------------------


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def cartan_pairing(beta: Root, alpha: Root) -> int:
    """<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)."""
    num, den = 2 * _dot(beta, alpha), _dot(alpha, alpha)
    if num % den:
        raise ValueError(f"{beta} and {alpha} do not pair integrally")
    return num // den


def coroot_coefficients(system: RootSystem, root: Root) -> tuple[int, ...]:
    """Coordinates of root^vee in the simple coroots."""
    simple = np.array([np.array(a) * 2 / _dot(a, a) for a in system.simple_roots]).T
    target = np.array(root) * 2 / _dot(root, root)
    sol = np.linalg.lstsq(simple, target, rcond=None)[0]
    out = tuple(int(round(x)) for x in sol)
    if not np.allclose(simple @ np.array(out), target):
        raise AssertionError(f"{root}^vee is not an integral combination of simple coroots")
    return out


class AbstractAlgebra:
    """The Lie algebra rebuilt from the bracket table alone.

    Basis keys are roots (for e_alpha) and integers i (for the coroot h_i of
    the i-th simple root).  Brackets with h_i use the Cartan pairing; the
    brackets [e_alpha, e_-alpha] are read from the matrix model and must
    equal h_alpha.
    """

    def __init__(self, basis: ChevalleyBasis):
        self.basis = basis
        sys_ = basis.system
        self.keys: list = list(range(sys_.rank)) + list(sys_.roots)
        self.cartan: dict[Root, dict[int, int]] = {}
        hs = [self._diag(sys_.simple_roots[i]) for i in range(sys_.rank)]
        hmat = np.array(hs, dtype=float).T
        for a in sys_.roots:
            d = self._diag(a)
            sol = np.linalg.lstsq(hmat, d, rcond=None)[0]
            coef = {i: int(round(x)) for i, x in enumerate(sol) if round(x)}
            if not np.array_equal(hmat @ np.array([coef.get(i, 0) for i in range(sys_.rank)]), d):
                raise AssertionError(f"[e{a}, e-{a}] is not in the span of the simple coroots")
            self.cartan[a] = coef

    def _diag(self, a: Root) -> np.ndarray:
        ea, eb = self.basis.matrix(a), self.basis.matrix(tuple(-x for x in a))
        comm = ea @ eb - eb @ ea
        if np.count_nonzero(comm - np.diag(np.diag(comm))):
            raise AssertionError(f"[e{a}, e-{a}] is not diagonal")
        return np.diag(comm).astype(float)

    def bracket(self, x, y) -> dict:
        sys_ = self.basis.system
        if isinstance(x, int) and isinstance(y, int):
            return {}
        if isinstance(x, int):
            c = cartan_pairing(y, sys_.simple_roots[x])
            return {y: c} if c else {}
        if isinstance(y, int):
            return {k: -v for k, v in self.bracket(y, x).items()}
        s = add(x, y)
        if not any(s):
            return dict(self.cartan[x])
        n = self.basis.coefficient(x, y)
        return {s: n} if n else {}

    def bracket_vec(self, vec: dict, y) -> dict:
        out: dict = {}
        for k, c in vec.items():
            for kk, v in self.bracket(k, y).items():
                out[kk] = out.get(kk, 0) + c * v
        return {k: v for k, v in out.items() if v}


def jacobi_failures(basis: ChevalleyBasis) -> list[tuple]:
    """Basis triples (x, y, z) where [[x,y],z] + [[y,z],x] + [[z,x],y] != 0."""
    alg = AbstractAlgebra(basis)
    keys = alg.keys
    bad = []
    for i, x in enumerate(keys):
        for j in range(i + 1, len(keys)):
            y = keys[j]
            xy = alg.bracket(x, y)
            for z in keys[j + 1:]:
                total: dict = {}
                for vec, w in ((xy, z), (alg.bracket(y, z), x), (alg.bracket(z, x), y)):
                    for k, v in alg.bracket_vec(vec, w).items():
                        total[k] = total.get(k, 0) + v
                if any(total.values()):
                    bad.append((x, y, z))
    return bad


def string_failures(basis: ChevalleyBasis) -> list[tuple]:
    """Pairs where N is not antisymmetric or |N| differs from r + 1.

    r is the largest integer with beta - r alpha a root, found by walking
    the root string directly.
    """
    sys_ = basis.system
    bad = []
    for a in sys_.roots:
        for b in sys_.roots:
            n = basis.coefficient(a, b)
            if not sys_.is_root(add(a, b)):
                if n:
                    bad.append((a, b, "nonzero off the root set"))
                continue
            r = 0
            while sys_.is_root(tuple(y - (r + 1) * x for x, y in zip(a, b))):
                r += 1
            if abs(n) != r + 1:
                bad.append((a, b, f"|N| = {abs(n)}, r + 1 = {r + 1}"))
            if basis.coefficient(b, a) != -n:
                bad.append((a, b, "not antisymmetric"))
    return bad


def coroot_failures(basis: ChevalleyBasis) -> list[Root]:
    """Roots a with [e_a, e_-a] different from h_a."""
    alg = AbstractAlgebra(basis)
    sys_ = basis.system
    bad = []
    for a in sys_.roots:
        want = {i: c for i, c in enumerate(coroot_coefficients(sys_, a)) if c}
        if alg.cartan[a] != want:
            bad.append(a)
    return bad


__all__ = [
    "AbstractAlgebra",
    "BracketResult",
    "ChevalleyBasis",
    "bracket",
    "cartan_pairing",
    "coroot_coefficients",
    "coroot_failures",
    "form_matrix",
    "jacobi_failures",
    "realize_basis",
    "string_failures",
]
