"""Orbit machinery for odd diagrams of type A.

Write e(a, b) = alpha_a + ... + alpha_b for 1 <= a <= b <= n, so in epsilon
coordinates e(a, b) = eps_a - eps_(b+1).  An odd diagram is the symmetric
sequence j_1 = 0 < j_2 < ... < j_(2r-1) < j_(2r) = n + 1 whose inner terms
are the weight-1 nodes.  A degree-1 root e(a, b) sits in block k when
j_(k-1) < a <= j_k <= b < j_(k+1).  The right move R sends block k to block
k+1 and the left move L sends block k to block k-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import WeightedDiagram, odd_sequence, phi_d
from .roots import Root, add

Pair = tuple[int, int]


class TypeAOddDiagram:
    def __init__(self, d: WeightedDiagram):
        if d.lie_type != "A":
            raise ValueError("type A diagram expected")
        self.d = d
        self.n = d.rank
        self.j = (None,) + odd_sequence(d).indices  # 1-based: j[1] = 0
        self.r = (len(self.j) - 1) // 2
        self.degree1 = set(phi_d(d, 1))
        self.degree2 = set(phi_d(d, 2))

    def J(self, k: int) -> int:
        return self.j[k]

    def root(self, a: int, b: int) -> Root:
        v = [0] * (self.n + 1)
        v[a - 1] += 1
        v[b] -= 1
        return tuple(v)

    def pair(self, root: Root) -> Pair:
        a = root.index(1) + 1
        b = root.index(-1)
        if b < a:
            raise ValueError(f"{root} is not a positive root")
        return a, b

    def block(self, a: int, b: int) -> int | None:
        for k in range(2, 2 * self.r):
            if self.J(k - 1) < a <= self.J(k) <= b < self.J(k + 1):
                return k
        return None

    def in_x(self, a: int, b: int) -> bool:
        k = self.block(a, b)
        return k is not None and k <= 2 * self.r - 2 and a > self.J(k) + self.J(k + 1) - self.J(k + 2)

    def in_y(self, a: int, b: int) -> bool:
        k = self.block(a, b)
        return k is not None and k >= 3 and b < self.J(k) + self.J(k - 1) - self.J(k - 2)

    def right(self, a: int, b: int) -> Pair:
        if not self.in_x(a, b):
            raise ValueError(f"e({a},{b}) is not in the domain of the right move")
        k = self.block(a, b)
        return b + 1, self.J(k) + self.J(k + 1) - a

    def left(self, a: int, b: int) -> Pair:
        if not self.in_y(a, b):
            raise ValueError(f"e({a},{b}) is not in the domain of the left move")
        k = self.block(a, b)
        return self.J(k) + self.J(k - 1) - b, a - 1

    def tau(self, a: int, b: int) -> Pair:
        """The mirror pair (n+1-b, n+1-a)."""
        return self.n + 1 - b, self.n + 1 - a

    def r_orbit(self, a: int, b: int) -> list[Pair]:
        """e(a,b), R e(a,b), R^2 e(a,b), ... up to the first root outside X."""
        out = [(a, b)]
        while self.in_x(*out[-1]):
            out.append(self.right(*out[-1]))
        return out

    def l_orbit(self, a: int, b: int) -> list[Pair]:
        out = [(a, b)]
        while self.in_y(*out[-1]):
            out.append(self.left(*out[-1]))
        return out


@dataclass
class OrbitClass:
    seed: Pair
    kind: str
    r_orbit: list[Root]
    l_orbit: list[Root]
    link_root: Root | None = None

    @property
    def members(self) -> list[Root]:
        out = list(self.r_orbit)
        out += [x for x in self.l_orbit if x not in out]
        return out

    def to_json(self) -> dict:
        return {
            "seed": list(self.seed),
            "kind": self.kind,
            "r_orbit": [list(x) for x in self.r_orbit],
            "l_orbit": [list(x) for x in self.l_orbit],
            "link_root": list(self.link_root) if self.link_root else None,
        }


def right_transform(d: WeightedDiagram, root: Root) -> Root:
    t = TypeAOddDiagram(d)
    return t.root(*t.right(*t.pair(tuple(root))))


def left_transform(d: WeightedDiagram, root: Root) -> Root:
    t = TypeAOddDiagram(d)
    return t.root(*t.left(*t.pair(tuple(root))))


def classify_orbits(d: WeightedDiagram) -> list[OrbitClass]:
    t = TypeAOddDiagram(d)
    seeds = sorted(t.pair(x) for x in t.degree1)
    classes: list[OrbitClass] = []
    seen: set[Root] = set()
    for a, b in seeds:
        if not t.in_x(a, b) or t.in_y(a, b):
            continue
        xs = t.r_orbit(a, b)
        ys = t.l_orbit(*t.tau(a, b))
        if set(xs) == set(ys):
            kind = "Omega0"
        elif set(xs) & set(ys):
            raise AssertionError(f"orbits of e({a},{b}) neither agree nor are disjoint")
        else:
            kind = "Omega1" if len(xs) % 2 else "Omega2"
        cls = OrbitClass((a, b), kind, [t.root(*p) for p in xs], [t.root(*p) for p in ys])
        members = set(cls.members)
        if members & seen:
            # a second seed of a class already found: the class is keyed by
            # its smallest seed, and the link root is only defined from there
            if members <= seen:
                continue
            raise AssertionError(f"class of e({a},{b}) overlaps an earlier class")
        if kind == "Omega1":
            cls.link_root = _link_root(t, xs, ys)
        seen |= members
        classes.append(cls)
    if seen != t.degree1:
        raise AssertionError("orbit classes do not cover the degree-1 roots")
    return classes


def _link_root(t: TypeAOddDiagram, xs: list[Pair], ys: list[Pair]) -> Root:
    """The unique degree-2 sum of the last right-orbit root with a left-orbit root."""
    last = t.root(*xs[-1])
    hits = [s for s, p in enumerate(ys) if add(last, t.root(*p)) in t.degree2]
    if len(hits) != 1:
        raise AssertionError(f"link root is not unique for seed {xs[0]}: {hits}")
    if hits[0] % 2:
        raise AssertionError(f"link root index {hits[0]} is odd for seed {xs[0]}")
    return add(last, t.root(*ys[hits[0]]))


def lambda_support_a(d: WeightedDiagram) -> set[Root]:
    support: set[Root] = set()
    for c in classify_orbits(d):
        support |= {add(x, y) for x, y in zip(c.r_orbit, c.r_orbit[1:])}
        if c.kind != "Omega0":
            support |= {add(x, y) for x, y in zip(c.l_orbit, c.l_orbit[1:])}
        if c.link_root is not None:
            support.add(c.link_root)
    return support
