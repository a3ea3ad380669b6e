"""Gram matrices of the alternating form x, y -> lam([x, y]) on the degree-1 part.

Rows and columns are indexed by the degree-1 roots in root-system order.
Entry (i, j) is lam(b_i + b_j) * N(b_i, b_j) when b_i + b_j is a root, which
then has degree 2, and 0 otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .chevalley import realize_basis
from .diagrams import WeightedDiagram, phi_d
from .fields import GF2k
from .linalg import det_bareiss, det_gf2
from .roots import Root, add


@dataclass(frozen=True)
class CoefficientRing:
    kind: str = "Z"
    k: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "GF2", "GF2k"):
            raise ValueError(f"unknown ring {self.kind!r}")
        if self.kind == "GF2k" and (self.k is None or not 2 <= self.k <= 64):
            raise ValueError("GF(2^k) needs 2 <= k <= 64")

    @classmethod
    def parse(cls, text: str) -> "CoefficientRing":
        t = text.strip().lower()
        if t in ("z", "int", "integers"):
            return cls("Z")
        if t == "gf2":
            return cls("GF2")
        if t.startswith("gf2k:"):
            return cls("GF2k", int(t.split(":", 1)[1]))
        raise ValueError(f"cannot parse ring {text!r}; use z, gf2 or gf2k:K")

    @property
    def field(self) -> GF2k | None:
        return _field(self.k) if self.kind == "GF2k" else None

    def name(self) -> str:
        return f"GF2k:{self.k}" if self.kind == "GF2k" else self.kind

    def reduce(self, v: int) -> int:
        """Image of an integer (a structure constant) in the ring."""
        return v if self.kind == "Z" else v & 1

    def mul(self, a: int, b: int) -> int:
        if self.kind == "Z":
            return a * b
        if self.kind == "GF2":
            return a & b & 1
        return self.field.mul(a, b)

    def check_value(self, v: int) -> int:
        v = int(v)
        if self.kind == "GF2" and v not in (0, 1):
            raise ValueError(f"{v} is not an element of GF(2)")
        if self.kind == "GF2k" and not 0 <= v < (1 << self.k):
            raise ValueError(f"{v} is not an element of GF(2^{self.k})")
        return v


@lru_cache(maxsize=None)
def _field(k: int) -> GF2k:
    return GF2k(k)


Z = CoefficientRing("Z")
GF2 = CoefficientRing("GF2")


@dataclass
class LambdaAssignment:
    ring: CoefficientRing = Z
    values: dict[Root, int] = field(default_factory=dict)

    def __post_init__(self):
        self.values = {tuple(r): self.ring.check_value(v) for r, v in self.values.items() if v}

    def get(self, root: Root) -> int:
        return self.values.get(tuple(root), 0)

    def support(self) -> list[Root]:
        return sorted(self.values)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.name(),
            "values": [{"root": list(r), "value": v} for r, v in sorted(self.values.items())],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LambdaAssignment":
        ring = CoefficientRing.parse(obj.get("ring", "Z"))
        vals = {tuple(int(x) for x in e["root"]): int(e["value"]) for e in obj.get("values", [])}
        return cls(ring, vals)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class GramStructure:
    """Everything about the Gram matrix of a diagram that does not depend on lam."""

    order: tuple[Root, ...]
    targets: tuple[Root, ...]
    # (i, j, target index, structure constant) for i < j
    entries: tuple[tuple[int, int, int, int], ...]

    @property
    def size(self) -> int:
        return len(self.order)

    def target_index(self) -> dict[Root, int]:
        return {r: k for k, r in enumerate(self.targets)}

    def gf2_masks(self) -> np.ndarray:
        """For each target gamma, the GF(2) Gram matrix of the indicator of gamma.

        Returned as an array of shape (len(targets), size) of uint64 row bitsets.
        """
        if self.size > 64:
            raise ValueError("bit masks need at most 64 rows")
        masks = np.zeros((len(self.targets), self.size), dtype=np.uint64)
        for i, j, t, nu in self.entries:
            if nu & 1:
                masks[t, i] |= np.uint64(1 << j)
                masks[t, j] |= np.uint64(1 << i)
        return masks

    def coefficient_matrix(self) -> np.ndarray:
        """Integer array C with Gram = sum_t lam_t * C[t]."""
        c = np.zeros((len(self.targets), self.size, self.size), dtype=np.int64)
        for i, j, t, nu in self.entries:
            c[t, i, j] = nu
            c[t, j, i] = -nu
        return c


_STRUCTURES: dict[tuple, GramStructure] = {}


def gram_structure(d: WeightedDiagram) -> GramStructure:
    key = (d.lie_type, d.rank, d.weights)
    if key not in _STRUCTURES:
        order = tuple(phi_d(d, 1))
        targets = tuple(phi_d(d, 2))
        tindex = {r: k for k, r in enumerate(targets)}
        basis = realize_basis(d.lie_type, d.rank)
        entries = []
        for i, a in enumerate(order):
            for j in range(i + 1, len(order)):
                b = order[j]
                s = add(a, b)
                if s in tindex:
                    entries.append((i, j, tindex[s], basis.coefficient(a, b)))
        _STRUCTURES[key] = GramStructure(order, targets, tuple(entries))
    return _STRUCTURES[key]


@dataclass
class GramMatrix:
    order: tuple[Root, ...]
    entries: list[list[int]]
    ring: CoefficientRing = Z

    @property
    def size(self) -> int:
        return len(self.order)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.name(),
            "order": [list(r) for r in self.order],
            "entries": self.entries,
        }


def check_assignment(d: WeightedDiagram, lam: LambdaAssignment) -> None:
    targets = set(gram_structure(d).targets)
    bad = [r for r in lam.values if r not in targets]
    if bad:
        raise ValueError(f"lambda has roots outside the degree-2 roots: {bad[:3]}")


def build_gram(d: WeightedDiagram, lam: LambdaAssignment) -> GramMatrix:
    check_assignment(d, lam)
    st = gram_structure(d)
    ring = lam.ring
    n = st.size
    m = [[0] * n for _ in range(n)]
    vals = [lam.get(t) for t in st.targets]
    for i, j, t, nu in st.entries:
        v = vals[t]
        if not v:
            continue
        x = ring.mul(ring.reduce(nu), v)
        m[i][j] = x
        m[j][i] = -x if ring.kind == "Z" else x
    return GramMatrix(st.order, m, ring)


def det_exact(g: GramMatrix) -> int:
    if g.size == 0:
        return 1
    if g.ring.kind == "Z":
        return det_bareiss(g.entries)
    if g.ring.kind == "GF2":
        return det_gf2(g.entries)
    return g.ring.field.det_np(np.array(g.entries, dtype=np.uint64))


def gram_det(d: WeightedDiagram, lam: LambdaAssignment) -> int:
    return det_exact(build_gram(d, lam))


def is_unimodular(d: WeightedDiagram, lam: LambdaAssignment) -> bool:
    if lam.ring.kind != "Z":
        raise ValueError("unimodularity is a statement over the integers")
    return gram_det(d, lam) in (1, -1)


__all__ = [
    "GF2",
    "CoefficientRing",
    "GramMatrix",
    "GramStructure",
    "LambdaAssignment",
    "Z",
    "build_gram",
    "check_assignment",
    "det_exact",
    "gram_det",
    "gram_structure",
    "is_unimodular",
]
