"""Two facts about symmetric matrices over GF(2), checked on generated instances.

The block matrix S is built from N groups; group r has k_r copies of a
square piece of order m_r + Gamma, namely [[0, A_r], [A_r^T, 0]] with A_r of
shape m_r x Gamma.  Copies b and c of any groups are coupled through their
Gamma x Gamma corners by e[b, c] times a fixed antidiagonal-identity pattern.
The couplings e form a symmetric 0/1 matrix with zero diagonal, indexed by
all copies in group order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .linalg import det_gf2, rank_gf2

HYPOTHESES = (1, 2, 3)


def row_embeds(a, b) -> bool:
    """True iff every row of a appears in b, counted with multiplicity."""
    a = np.asarray(a, dtype=np.uint8) % 2
    b = np.asarray(b, dtype=np.uint8) % 2
    if a.size and b.size and a.shape[1] != b.shape[1]:
        raise ValueError("row_embeds needs matching column counts")
    need = Counter(map(bytes, a))
    have = Counter(map(bytes, b))
    return all(have[row] >= c for row, c in need.items())


@dataclass
class BlockSpec:
    n: int
    gamma: int
    k: list[int]
    a: list[np.ndarray]
    e: np.ndarray

    @property
    def N(self) -> int:
        return len(self.k)

    @property
    def m(self) -> list[int]:
        return [x.shape[0] for x in self.a]

    @property
    def order(self) -> int:
        return sum(k * (m + self.gamma) for k, m in zip(self.k, self.m))

    def validate(self) -> None:
        if self.gamma not in (2 * self.n, 2 * self.n + 1):
            raise ValueError("Gamma must be 2n or 2n+1")
        if len(self.a) != len(self.k) or any(k < 1 for k in self.k):
            raise ValueError("each group needs a matrix and k_r >= 1")
        m = self.m
        for r, x in enumerate(self.a):
            if x.shape[1] != self.gamma or not 1 <= m[r] <= 2 * self.n:
                raise ValueError(f"A_{r + 1} has shape {x.shape}")
        for r in range(len(m) - 1):
            if m[r] >= m[r + 1]:
                raise ValueError("m_r must increase strictly")
            if not row_embeds(self.a[r], self.a[r + 1]):
                raise ValueError(f"rows of A_{r + 1} do not embed in A_{r + 2}")
        copies = sum(self.k)
        e = np.asarray(self.e) % 2
        if e.shape != (copies, copies) or (e != e.T).any() or e.diagonal().any():
            raise ValueError("couplings must be symmetric with zero diagonal")

    def hypotheses_met(self) -> set[int]:
        """Which of the three singularity hypotheses hold."""
        m, two_n = self.m, 2 * self.n
        met = set()
        if self.gamma == two_n:
            if all(x % 2 == 0 for x in m) and any(k % 2 and x < two_n for k, x in zip(self.k, m)):
                met.add(1)
            if any(x % 2 for x in m):
                met.add(2)
        elif any(x % 2 == 0 for x in m):
            met.add(3)
        return met


def _corner(n: int, gamma: int) -> np.ndarray:
    c = np.zeros((gamma, gamma), dtype=np.uint8)
    off = gamma - 2 * n
    eye = np.eye(n, dtype=np.uint8)
    c[off:off + n, off + n:] = eye
    c[off + n:, off:off + n] = eye
    return c


def assemble_S(spec: BlockSpec) -> np.ndarray:
    spec.validate()
    g = spec.gamma
    starts = []  # start of the Gamma part of each copy
    size = 0
    pieces = []
    for r, k in enumerate(spec.k):
        for _ in range(k):
            pieces.append((size, spec.a[r]))
            size += spec.a[r].shape[0]
            starts.append(size)
            size += g
    s = np.zeros((size, size), dtype=np.uint8)
    for (top, a), gs in zip(pieces, starts):
        mr = a.shape[0]
        s[top:top + mr, gs:gs + g] = a
        s[gs:gs + g, top:top + mr] = a.T
    corner = _corner(spec.n, g)
    e = np.asarray(spec.e) % 2
    for b, gb in enumerate(starts):
        for c, gc in enumerate(starts):
            if e[b, c]:
                s[gb:gb + g, gc:gc + g] ^= corner
    return s


def is_block_singular(spec: BlockSpec) -> bool:
    """True iff S is singular over GF(2)."""
    if not spec.hypotheses_met():
        raise ValueError("none of the singularity hypotheses hold")
    return det_gf2(assemble_S(spec)) == 0


def alternating_kernel_dim(a) -> int:
    """Kernel dimension of a singular symmetric zero-diagonal matrix of even order."""
    a = np.asarray(a, dtype=np.uint8) % 2
    m = a.shape[0]
    if a.shape != (m, m) or m % 2:
        raise ValueError("need a square matrix of even order")
    if (a != a.T).any() or a.diagonal().any():
        raise ValueError("need a symmetric matrix with zero diagonal")
    if det_gf2(a):
        raise ValueError("matrix is not singular")
    return m - rank_gf2(a)


# -- random instances ----------------------------------------------------


def _increasing(rng: np.random.Generator, choices: list[int], count: int) -> list[int] | None:
    if len(choices) < count:
        return None
    return sorted(rng.choice(choices, size=count, replace=False).tolist())


def random_spec(rng: np.random.Generator, hypothesis: int, max_n: int = 4, max_groups: int = 3,
                max_copies: int = 3) -> BlockSpec:
    """A random BlockSpec meeting the given hypothesis.

    A_1 is sampled row by row; A_(r+1) is A_r with fresh rows inserted at
    random positions, so the row embedding holds by construction.
    """
    if hypothesis not in HYPOTHESES:
        raise ValueError(f"hypothesis must be one of {HYPOTHESES}")
    while True:
        n = int(rng.integers(1, max_n + 1))
        groups = int(rng.integers(1, max_groups + 1))
        gamma = 2 * n + (1 if hypothesis == 3 else 0)
        pool = list(range(2, 2 * n + 1, 2)) if hypothesis == 1 else list(range(1, 2 * n + 1))
        m = _increasing(rng, pool, groups)
        if m is None:
            continue
        k = [int(x) for x in rng.integers(1, max_copies + 1, size=groups)]
        if hypothesis == 1:
            candidates = [r for r in range(groups) if m[r] < 2 * n]
            if not candidates:
                continue
            sigma = int(rng.choice(candidates))
            if k[sigma] % 2 == 0:
                k[sigma] -= 1
        if hypothesis == 2 and not any(x % 2 for x in m):
            continue
        if hypothesis == 3 and not any(x % 2 == 0 for x in m):
            continue
        a = [rng.integers(0, 2, size=(m[0], gamma), dtype=np.uint8)]
        for r in range(1, groups):
            rows = list(a[-1])
            for _ in range(m[r] - m[r - 1]):
                rows.insert(int(rng.integers(0, len(rows) + 1)), rng.integers(0, 2, size=gamma, dtype=np.uint8))
            a.append(np.array(rows, dtype=np.uint8))
        copies = sum(k)
        upper = np.triu(rng.integers(0, 2, size=(copies, copies), dtype=np.uint8), 1)
        spec = BlockSpec(n, gamma, k, a, upper | upper.T)
        spec.validate()
        if hypothesis in spec.hypotheses_met():
            return spec


def random_singular_symmetric(rng: np.random.Generator, max_half: int = 6) -> np.ndarray:
    """A random singular symmetric zero-diagonal GF(2) matrix of even order."""
    while True:
        m = 2 * int(rng.integers(1, max_half + 1))
        upper = np.triu(rng.integers(0, 2, size=(m, m), dtype=np.uint8), 1)
        a = upper | upper.T
        if not det_gf2(a):
            return a


__all__ = [
    "BlockSpec",
    "HYPOTHESES",
    "assemble_S",
    "alternating_kernel_dim",
    "is_block_singular",
    "random_singular_symmetric",
    "random_spec",
    "row_embeds",
]
