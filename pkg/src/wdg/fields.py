"""Arithmetic in GF(2^k), elements stored as ints (bit i = coefficient of x^i).

The modulus for each k is the first irreducible polynomial of lowest weight:
a trinomial x^k + x^a + 1 with a minimal, otherwise a pentanomial
x^k + x^a + x^b + x^c + 1 with (a, b, c) lexicographically minimal.  This
makes every run reproducible without shipping a table.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _powmod_x(e: int, m: int) -> int:
    """x^(2^e) mod m."""
    r = 2
    for _ in range(e):
        r = poly_mod(clmul(r, r), m)
    return r


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def is_irreducible(m: int) -> bool:
    """Rabin's test for a polynomial over GF(2) of degree >= 1."""
    k = m.bit_length() - 1
    if k < 1:
        return False
    if _powmod_x(k, m) != 2:
        return False
    primes = {p for p in range(2, k + 1) if k % p == 0 and all(p % q for q in range(2, p))}
    for p in primes:
        g = _poly_gcd(m, _powmod_x(k // p, m) ^ 2)
        if g != 1:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(k: int) -> int:
    if not 2 <= k <= 64:
        raise ValueError(f"GF(2^k) needs 2 <= k <= 64, got {k}")
    top = (1 << k) | 1
    for a in range(1, k):
        if is_irreducible(top | (1 << a)):
            return top | (1 << a)
    for a in range(3, k):
        for b in range(2, a):
            for c in range(1, b):
                m = top | (1 << a) | (1 << b) | (1 << c)
                if is_irreducible(m):
                    return m
    raise AssertionError(f"no low-weight irreducible of degree {k}")


def modulus_terms(m: int) -> list[int]:
    return [i for i in range(m.bit_length() - 1, -1, -1) if m >> i & 1]


class GF2k:
    def __init__(self, k: int, modulus: int | None = None):
        self.k = k
        self.modulus = modulus if modulus is not None else default_modulus(k)
        if self.modulus.bit_length() - 1 != k:
            raise ValueError("modulus degree does not match k")
        self.order = 1 << k

    def __repr__(self) -> str:
        terms = " + ".join(f"x^{i}" if i > 1 else ("x" if i == 1 else "1")
                           for i in modulus_terms(self.modulus))
        return f"GF(2^{self.k}) mod {terms}"

    def mul(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^k)")
        return self.pow(a, self.order - 2)

    def from_int(self, v: int) -> int:
        """Image of an integer under Z -> GF(2) -> GF(2^k)."""
        return v & 1

    def random(self, rng: np.random.Generator, size=None):
        """Uniform field elements: an int, or a uint64 array when size is given."""
        draw = rng.integers(0, self.order, size=size, dtype=np.uint64, endpoint=False)
        return int(draw) if size is None else draw

    # vectorised helpers over numpy uint64 arrays

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of two uint64 arrays of field elements."""
        a = np.asarray(a, dtype=np.uint64)
        b = np.asarray(b, dtype=np.uint64)
        a, b = np.broadcast_arrays(a, b)
        a = a.copy()
        out = np.zeros(a.shape, dtype=np.uint64)
        one = np.uint64(1)
        top = np.uint64(self.k - 1)
        red = np.uint64(self.modulus & ((1 << self.k) - 1))
        mask = np.uint64((1 << self.k) - 1) if self.k < 64 else np.uint64(0xFFFFFFFFFFFFFFFF)
        for i in range(self.k):
            bit = (b >> np.uint64(i)) & one
            out ^= a * bit
            carry = (a >> top) & one
            a = ((a << one) & mask) ^ (red * carry)
        return out

    def det(self, rows: list[list[int]]) -> int:
        """Determinant by Gaussian elimination, scalar arithmetic."""
        m = [list(r) for r in rows]
        n = len(m)
        det = 1
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c]), None)
            if p is None:
                return 0
            if p != c:
                m[c], m[p] = m[p], m[c]
            piv = m[c][c]
            det = self.mul(det, piv)
            inv = self.inv(piv)
            for r in range(c + 1, n):
                if m[r][c]:
                    f = self.mul(m[r][c], inv)
                    row_c = m[c]
                    m[r] = [x ^ self.mul(f, y) if y else x for x, y in zip(m[r], row_c)]
        return det

    def det_np(self, mat: np.ndarray) -> int:
        """Determinant with the row updates vectorised in numpy."""
        m = np.array(mat, dtype=np.uint64, copy=True)
        n = m.shape[0]
        det = 1
        for c in range(n):
            nz = np.flatnonzero(m[c:, c])
            if nz.size == 0:
                return 0
            p = c + int(nz[0])
            if p != c:
                m[[c, p]] = m[[p, c]]
            piv = int(m[c, c])
            det = self.mul(det, piv)
            inv = np.uint64(self.inv(piv))
            below = m[c + 1:, c]
            if below.any():
                f = self.vmul(below, inv)
                m[c + 1:, c:] ^= self.vmul(f[:, None], m[c, c:][None, :])
        return det


__all__ = ["GF2k", "clmul", "default_modulus", "is_irreducible", "modulus_terms", "poly_mod"]
