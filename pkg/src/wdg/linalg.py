"""Exact determinants: fraction-free over Z, bit-packed over GF(2)."""

from __future__ import annotations

import numpy as np


def det_bareiss(rows) -> int:
    """Integer determinant by Bareiss elimination; exact for any size."""
    m = [[int(x) for x in r] for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        if m[c][c] == 0:
            p = next((r for r in range(c + 1, n) if m[r][c]), None)
            if p is None:
                return 0
            m[c], m[p] = m[p], m[c]
            sign = -sign
        pc = m[c][c]
        row_c = m[c]
        for r in range(c + 1, n):
            row_r = m[r]
            a = row_r[c]
            for j in range(c + 1, n):
                row_r[j] = (row_r[j] * pc - a * row_c[j]) // prev
            row_r[c] = 0
        prev = pc
    return sign * m[n - 1][n - 1]


def det_mod_p(rows, p: int) -> int:
    """Determinant modulo a prime p."""
    m = [[int(x) % p for x in r] for r in rows]
    n = len(m)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c] % p
        inv = pow(m[c][c], p - 2, p)
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv % p
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
    return det % p


def pack_rows(rows) -> list[int]:
    """Rows of a 0/1 matrix as int bitsets, bit j = column j."""
    out = []
    for r in rows:
        v = 0
        for j, x in enumerate(r):
            if int(x) & 1:
                v |= 1 << j
        out.append(v)
    return out


def det_gf2_bits(bits: list[int], n: int) -> int:
    """Determinant over GF(2) of an n x n matrix given as row bitsets."""
    rows = list(bits)
    for c in range(n):
        mask = 1 << c
        p = next((r for r in range(c, n) if rows[r] & mask), None)
        if p is None:
            return 0
        rows[c], rows[p] = rows[p], rows[c]
        pr = rows[c]
        for r in range(c + 1, n):
            if rows[r] & mask:
                rows[r] ^= pr
    return 1


def det_gf2(rows) -> int:
    return det_gf2_bits(pack_rows(rows), len(rows))


def rank_gf2(rows) -> int:
    """Rank over GF(2) of a (possibly rectangular) 0/1 matrix."""
    basis: dict[int, int] = {}
    for v in pack_rows(rows):
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    return len(basis)


def det_gf2_batch(rows: np.ndarray, n: int) -> np.ndarray:
    """GF(2) determinants of a batch of n x n matrices, n <= 64.

    `rows` has shape (batch, n) and dtype uint64; row i of matrix b is the
    bitset rows[b, i].  Returns a uint8 array of determinants.
    """
    if n > 64:
        raise ValueError("bit-packed batch elimination needs n <= 64")
    m = np.array(rows, dtype=np.uint64, copy=True)
    batch = m.shape[0]
    alive = np.ones(batch, dtype=bool)
    idx = np.arange(batch)
    one = np.uint64(1)
    for c in range(n):
        col = ((m[:, c:] >> np.uint64(c)) & one).astype(bool)
        has = col.any(axis=1)
        alive &= has
        piv = c + col.argmax(axis=1)
        pr = m[idx, piv]
        m[idx, piv] = m[:, c]
        m[:, c] = pr
        below = ((m[:, c + 1:] >> np.uint64(c)) & one).astype(bool)
        m[:, c + 1:] ^= np.where(below, pr[:, None], np.uint64(0))
    return alive.astype(np.uint8)


__all__ = [
    "det_bareiss",
    "det_gf2",
    "det_gf2_batch",
    "det_gf2_bits",
    "det_mod_p",
    "pack_rows",
    "rank_gf2",
]
