"""Classical root systems A_n, B_n, C_n, D_n in epsilon coordinates.

Roots are plain tuples of ints.  Type A_n lives in Z^{n+1}; B_n, C_n, D_n
live in Z^n.  The positive roots are listed in a fixed order: first the
differences e_i - e_j, then the sums e_i + e_j, then the single-coordinate
roots (e_i for B, 2e_i for C), each group ordered by (i, j).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

Root = tuple[int, ...]

LIE_TYPES = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
# smallest ranks that still make sense as (possibly reducible) root systems;
# reduction can pass through these on the way down
MIN_RANK_LENIENT = {"A": 1, "B": 1, "C": 1, "D": 2}


def _unit(dim: int, i: int, c: int = 1) -> list[int]:
    v = [0] * dim
    v[i] = c
    return v


def _add(*vs: list[int]) -> Root:
    return tuple(sum(x) for x in zip(*vs))


def check_type(lie_type: str, rank: int, strict: bool = True) -> None:
    if lie_type not in LIE_TYPES:
        raise ValueError(f"unknown Lie type {lie_type!r}")
    floor = (MIN_RANK if strict else MIN_RANK_LENIENT)[lie_type]
    if not isinstance(rank, int) or rank < floor:
        raise ValueError(f"rank {rank} is too small for type {lie_type}")


def ambient_dim(lie_type: str, rank: int) -> int:
    return rank + 1 if lie_type == "A" else rank


@dataclass(frozen=True)
class RootSystem:
    lie_type: str
    rank: int
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    _index: dict = field(default=None, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return ambient_dim(self.lie_type, self.rank)

    @property
    def roots(self) -> tuple[Root, ...]:
        """All roots: positive roots followed by their negatives."""
        return self.positive_roots + tuple(neg(r) for r in self.positive_roots)

    def is_root(self, v) -> bool:
        return tuple(v) in self._index

    def index(self, root: Root) -> int:
        return self._index[tuple(root)]

    def is_positive(self, root: Root) -> bool:
        return tuple(root) in self._index and self._index[tuple(root)] < len(self.positive_roots)


def neg(root: Root) -> Root:
    return tuple(-x for x in root)


def add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def _positive_roots(lie_type: str, n: int) -> list[Root]:
    dim = ambient_dim(lie_type, n)
    e = lambda i, c=1: _unit(dim, i, c)  # noqa: E731
    diffs = [_add(e(i), e(j, -1)) for i in range(dim) for j in range(i + 1, dim)]
    if lie_type == "A":
        return diffs
    sums = [_add(e(i), e(j)) for i in range(n) for j in range(i + 1, n)]
    if lie_type == "B":
        return diffs + sums + [tuple(e(i)) for i in range(n)]
    if lie_type == "C":
        return diffs + sums + [tuple(e(i, 2)) for i in range(n)]
    return diffs + sums


def _simple_roots(lie_type: str, n: int) -> list[Root]:
    dim = ambient_dim(lie_type, n)
    out = [_add(_unit(dim, i), _unit(dim, i + 1, -1)) for i in range(dim - 1)]
    if lie_type == "B":
        out.append(tuple(_unit(dim, n - 1)))
    elif lie_type == "C":
        out.append(tuple(_unit(dim, n - 1, 2)))
    elif lie_type == "D":
        out.append(_add(_unit(dim, n - 2), _unit(dim, n - 1)))
    return out


_CACHE: dict[tuple[str, int], RootSystem] = {}


def build_root_system(lie_type: str, rank: int, strict: bool = True) -> RootSystem:
    check_type(lie_type, rank, strict)
    key = (lie_type, rank)
    if key not in _CACHE:
        pos = _positive_roots(lie_type, rank)
        allr = pos + [neg(r) for r in pos]
        _CACHE[key] = RootSystem(
            lie_type,
            rank,
            tuple(_simple_roots(lie_type, rank)),
            tuple(pos),
            {r: k for k, r in enumerate(allr)},
        )
    return _CACHE[key]


def simple_coefficients(system: RootSystem, root: Root) -> tuple[int, ...]:
    """Coefficients of `root` in the basis of simple roots."""
    root = tuple(root)
    if len(root) != system.dim:
        raise ValueError(f"root {root} has wrong length for {system.lie_type}{system.rank}")
    n = system.rank
    partial = [0]
    for x in root:
        partial.append(partial[-1] + x)
    c = [Fraction(partial[i + 1]) for i in range(n)]
    if system.lie_type == "C":
        c[n - 1] = Fraction(partial[n], 2)
    elif system.lie_type == "D":
        s = partial[n - 1]
        c[n - 2] = Fraction(s - root[n - 1], 2)
        c[n - 1] = Fraction(s + root[n - 1], 2)
    if any(x.denominator != 1 for x in c):
        raise ValueError(f"{root} is not in the root lattice")
    return tuple(int(x) for x in c)


def multiplicity(system: RootSystem, root: Root, i: int) -> int:
    """Coefficient [root : alpha_i] of the i-th simple root (1-based)."""
    if not system.is_root(root):
        raise ValueError(f"{tuple(root)} is not a root of {system.lie_type}{system.rank}")
    if not 1 <= i <= system.rank:
        raise ValueError(f"simple root index {i} out of range 1..{system.rank}")
    return simple_coefficients(system, root)[i - 1]


def root_height(system: RootSystem, root: Root) -> int:
    return sum(simple_coefficients(system, root))


def pairing(root: Root, h) -> int:
    """The value <root, h> for a grading vector h in the same coordinates."""
    return sum(a * b for a, b in zip(root, h))


__all__ = [
    "LIE_TYPES",
    "MIN_RANK",
    "Root",
    "RootSystem",
    "add",
    "ambient_dim",
    "build_root_system",
    "check_type",
    "multiplicity",
    "neg",
    "pairing",
    "root_height",
    "simple_coefficients",
    "sub",
]
