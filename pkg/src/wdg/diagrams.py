"""Weighted Dynkin diagrams of classical type from partition data.

A nilpotent orbit is given by a partition (type A) or a bipartition
(mu, nu) (types B, C, D).  From it we read off the elementary divisors, the
xi-sequence, and the weights on the simple roots.  The module also holds
the reduction of an arbitrary diagram to an odd one and the specialness
test on the divisors.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from dataclasses import dataclass
from functools import cached_property

from .roots import MIN_RANK, Root, build_root_system, check_type, pairing

VARIANTS = ("plus", "minus")


class InvalidInput(ValueError):
    pass


@dataclass(frozen=True)
class PartitionInput:
    lie_type: str
    rank: int
    mu: tuple[int, ...] = ()
    nu: tuple[int, ...] = ()
    variant: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(sorted(self.mu, reverse=True)))
        object.__setattr__(self, "nu", tuple(sorted(self.nu, reverse=True)))
        validate_input(self)

    @property
    def very_even(self) -> bool:
        return self.lie_type == "D" and not self.nu and all(m % 2 == 0 for m in self.mu)

    def to_json(self) -> dict:
        return {
            "type": self.lie_type,
            "rank": self.rank,
            "mu": list(self.mu),
            "nu": list(self.nu),
            "variant": self.variant,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PartitionInput":
        try:
            return cls(obj["type"], int(obj["rank"]), tuple(obj.get("mu") or ()),
                       tuple(obj.get("nu") or ()), obj.get("variant"))
        except KeyError as exc:
            raise InvalidInput(f"missing field {exc}") from None

    def label(self) -> str:
        s = f"{self.lie_type}{self.rank} mu={list(self.mu)}"
        if self.lie_type != "A":
            s += f" nu={list(self.nu)}"
        if self.variant:
            s += f" {self.variant}"
        return s


def validate_input(p: PartitionInput) -> None:
    try:
        check_type(p.lie_type, p.rank)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    if any((not isinstance(x, int)) or x <= 0 for x in p.mu + p.nu):
        raise InvalidInput("partition parts must be positive integers")
    n, t = p.rank, p.lie_type
    if t == "A":
        if p.nu:
            raise InvalidInput("type A takes no nu")
        if sum(p.mu) != n + 1:
            raise InvalidInput(f"|mu| must equal n+1 = {n + 1}")
    elif t == "C":
        if sum(p.mu) + sum(p.nu) != n:
            raise InvalidInput(f"|mu|+|nu| must equal n = {n}")
        if len(set(p.nu)) != len(p.nu):
            raise InvalidInput("nu must have distinct parts")
    else:
        total = 2 * n + 1 if t == "B" else 2 * n
        if 2 * sum(p.mu) + sum(p.nu) != total:
            raise InvalidInput(f"2|mu|+|nu| must equal {total}")
        if len(set(p.nu)) != len(p.nu):
            raise InvalidInput("nu must have distinct parts")
        if any(x % 2 == 0 for x in p.nu):
            raise InvalidInput("nu must have odd parts")
    if p.variant is not None:
        if p.variant not in VARIANTS:
            raise InvalidInput(f"variant must be one of {VARIANTS}")
        if not p.very_even:
            raise InvalidInput("a variant is only allowed for very even type D inputs")
    elif p.very_even:
        raise InvalidInput("very even type D inputs need a variant (plus or minus)")


def divisors_from_input(p: PartitionInput) -> tuple[int, ...]:
    if p.lie_type == "A":
        out = list(p.mu)
    elif p.lie_type == "C":
        out = [m for m in p.mu for _ in (0, 1)] + [2 * v for v in p.nu]
    else:
        out = [m for m in p.mu for _ in (0, 1)] + list(p.nu)
    return tuple(sorted(out))


def divisor_total(lie_type: str, rank: int) -> int:
    return {"A": rank + 1, "B": 2 * rank + 1}.get(lie_type, 2 * rank)


def rank_of_divisors(lie_type: str, divisors) -> int:
    s = sum(divisors)
    return s - 1 if lie_type == "A" else s // 2


def input_from_divisors(lie_type: str, divisors, variant: str | None = None) -> PartitionInput:
    """The unique PartitionInput whose elementary divisors are `divisors`."""
    counts = Counter(divisors)
    mu: list[int] = []
    nu: list[int] = []
    if lie_type == "A":
        mu = list(divisors)
    else:
        free = 0 if lie_type == "C" else 1  # parity that may occur an odd number of times
        for m, c in counts.items():
            if c % 2:
                if m % 2 != free:
                    raise InvalidInput(f"divisor {m} occurs an odd number of times")
                nu.append(m // 2 if lie_type == "C" else m)
            mu += [m] * (c // 2)
    rank = rank_of_divisors(lie_type, divisors)
    if lie_type == "B" and sum(divisors) % 2 == 0 or lie_type in "CD" and sum(divisors) % 2:
        raise InvalidInput(f"divisors {tuple(divisors)} have the wrong total for type {lie_type}")
    p_very_even = lie_type == "D" and not nu and all(m % 2 == 0 for m in mu)
    return PartitionInput(lie_type, rank, tuple(mu), tuple(nu),
                          (variant or "plus") if p_very_even else None)


def xi_sequence(divisors) -> tuple[int, ...]:
    xs = [m - 1 - 2 * j for m in divisors for j in range(m)]
    return tuple(sorted(xs, reverse=True))


@dataclass(frozen=True)
class WeightedDiagram:
    lie_type: str
    rank: int
    weights: tuple[int, ...]
    source: PartitionInput | None = None

    @cached_property
    def system(self):
        return build_root_system(self.lie_type, self.rank, strict=False)

    @cached_property
    def grading(self) -> tuple:
        """The vector h with d(beta) = <beta, h> for every root beta."""
        w, n = self.weights, self.rank
        h = [Fraction(0)] * self.system.dim
        if self.lie_type == "A":
            for i in range(n - 1, -1, -1):
                h[i] = h[i + 1] + w[i]
            shift = sum(h) / (n + 1)
            h = [x - shift for x in h]
        elif self.lie_type == "D":
            h[n - 1] = Fraction(w[n - 1] - w[n - 2], 2)
            h[n - 2] = Fraction(w[n - 1] + w[n - 2], 2)
            for i in range(n - 3, -1, -1):
                h[i] = h[i + 1] + w[i]
        else:
            h[n - 1] = Fraction(w[n - 1], 2 if self.lie_type == "C" else 1)
            for i in range(n - 2, -1, -1):
                h[i] = h[i + 1] + w[i]
        return tuple(int(x) if x.denominator == 1 else x for x in h)

    def degree(self, root: Root) -> int:
        return int(pairing(root, self.grading))

    def to_json(self) -> dict:
        return {
            "type": self.lie_type,
            "rank": self.rank,
            "weights": list(self.weights),
            "source": self.source.to_json() if self.source else None,
        }


def weights_from_divisors(lie_type: str, divisors, variant: str | None = None) -> tuple[int, ...]:
    xi = xi_sequence(divisors)
    n = rank_of_divisors(lie_type, divisors)
    if lie_type == "A":
        w = [xi[i] - xi[i + 1] for i in range(n)]
    else:
        w = [xi[i] - xi[i + 1] for i in range(n - 1)]
        if lie_type == "C":
            w.append(2 * xi[n - 1])
        elif lie_type == "B":
            w.append(xi[n - 1])
        else:
            w.append(xi[n - 2] + xi[n - 1])
            if variant == "minus":
                w[n - 2], w[n - 1] = w[n - 1], w[n - 2]
    if any(x not in (0, 1, 2) for x in w):
        raise AssertionError(f"weight outside {{0,1,2}} for divisors {tuple(divisors)}: {w}")
    return tuple(w)


def diagram_from_input(p: PartitionInput) -> WeightedDiagram:
    w = weights_from_divisors(p.lie_type, divisors_from_input(p), p.variant)
    return WeightedDiagram(p.lie_type, p.rank, w, p)


def diagram_from_divisors(lie_type: str, divisors, variant: str | None = None) -> WeightedDiagram:
    """Diagram of a divisor sequence; ranks below the usual minimum are allowed."""
    rank = rank_of_divisors(lie_type, divisors)
    check_type(lie_type, rank, strict=False)
    try:
        source = input_from_divisors(lie_type, divisors, variant)
    except InvalidInput:
        if rank >= MIN_RANK[lie_type]:
            raise
        source = None
    if source is not None:
        variant = source.variant
    return WeightedDiagram(lie_type, rank, weights_from_divisors(lie_type, divisors, variant), source)


def is_odd(d: WeightedDiagram) -> bool:
    return max(d.weights, default=0) == 1


def is_zero(d: WeightedDiagram) -> bool:
    return not any(d.weights)


def phi_d(d: WeightedDiagram, i: int) -> list[Root]:
    """Roots of degree i, in the order of the root system."""
    return [r for r in d.system.roots if d.degree(r) == i]


def reduce_gap(divisors) -> tuple[int, int]:
    """The largest divisor r and the largest divisor s < r (0 if none)."""
    r = max(divisors)
    return r, max((m for m in divisors if m < r), default=0)


def reduce_step(lie_type: str, divisors) -> tuple[int, ...]:
    """Shrink every copy of the largest divisor r to t = r - 2*floor((r-s)/2).

    s is the largest divisor below r.  With no smaller divisor we take s = 0,
    which sends the sequence straight to a zero diagram: all ones for odd r,
    the empty sequence for even r.
    """
    divs = sorted(divisors)
    if not divs:
        raise InvalidInput("empty divisor sequence")
    r, s = reduce_gap(divs)
    if r - s < 2:
        raise InvalidInput(f"nothing to reduce: r-s = {r - s} is below 2")
    t = r - 2 * ((r - s) // 2)
    return tuple(sorted(t if m == r else m for m in divs if t or m != r))


def is_reduced(divisors) -> bool:
    """True when the divisors give an odd or a zero diagram."""
    if not divisors:
        return True
    r, s = reduce_gap(divisors)
    return r - s < 2


def reduce_to_odd(lie_type: str, divisors) -> list[tuple[int, ...]]:
    """The chain of reductions from `divisors` down to an odd or zero diagram."""
    chain = [tuple(sorted(divisors))]
    while not is_reduced(chain[-1]):
        nxt = reduce_step(lie_type, chain[-1])
        if sum(nxt) >= sum(chain[-1]):
            raise AssertionError("reduction did not shrink the divisors")
        chain.append(nxt)
    return chain


def is_special_divisors(lie_type: str, divisors) -> bool:
    """The parity conditions on the elementary divisors."""
    if lie_type == "A":
        return True
    divs = sorted(divisors)
    # C counts even divisors between odd ones; B and D the other way round
    marker_parity = 1 if lie_type == "C" else 0
    markers = sorted({m for m in divs if m % 2 == marker_parity})
    counted = [m for m in divs if m % 2 != marker_parity]
    for a, b in zip(markers, markers[1:]):
        if sum(1 for m in counted if a < m < b) % 2:
            return False
    if not markers:
        return True
    tail = sum(1 for m in counted if m > markers[-1]) % 2
    return tail == (1 if lie_type == "B" else 0)


def is_special(p: PartitionInput) -> bool:
    return is_special_divisors(p.lie_type, divisors_from_input(p))


def transpose(partition) -> tuple[int, ...]:
    parts = sorted(partition, reverse=True)
    return tuple(sum(1 for x in parts if x > i) for i in range(parts[0] if parts else 0))


def is_special_by_transpose(lie_type: str, divisors) -> bool:
    """Specialness through the transposed Jordan type (an independent check)."""
    if lie_type == "A":
        return True
    c = Counter(transpose(divisors))
    if lie_type == "B":
        return all(v % 2 == 0 for m, v in c.items() if m % 2 == 0)
    return all(v % 2 == 0 for m, v in c.items() if m % 2 == 1)


@dataclass(frozen=True)
class OddSequence:
    lie_type: str
    rank: int
    indices: tuple[int, ...]
    d_case: str | None = None
    excluded: bool = False

    @property
    def k(self) -> int:
        return len(self.indices)

    @property
    def gaps(self) -> tuple[int, ...]:
        idx = self.indices
        return tuple(idx[l] - (idx[l - 1] if l else 0) for l in range(len(idx)))

    def s(self, l: int) -> int:
        """Gap s_l (1-based); for the first D case s_{k+1} = n-1-i_k."""
        if self.d_case == "case1" and l == self.k + 1:
            return self.rank - 1 - (self.indices[-1] if self.indices else 0)
        return self.gaps[l - 1]

    def i(self, l: int) -> int:
        """Index i_l (1-based) with i_0 = 0."""
        return self.indices[l - 1] if l else 0

    def to_json(self) -> dict:
        return {
            "type": self.lie_type,
            "rank": self.rank,
            "indices": list(self.indices),
            "gaps": list(self.gaps),
            "d_case": self.d_case,
            "excluded": self.excluded,
        }


def odd_sequence(d: WeightedDiagram) -> OddSequence:
    if not is_odd(d):
        raise InvalidInput("odd_sequence needs an odd diagram")
    n, t, w = d.rank, d.lie_type, d.weights
    if t == "A":
        ones = [i + 1 for i in range(n) if w[i] == 1]
        return OddSequence(t, n, (0, *ones, n + 1))
    if t != "D":
        seq = OddSequence(t, n, tuple(i + 1 for i in range(n) if w[i] == 1))
    else:
        head = tuple(i + 1 for i in range(n - 2) if w[i] == 1)
        case = "case1" if w[n - 2] == 1 else "case2"
        if w[n - 2] != w[n - 1]:
            raise AssertionError(f"odd D diagram with unequal fork weights {w}")
        excluded = case == "case1" and not head
        seq = OddSequence(t, n, head, case, excluded)
    problem = _odd_sequence_violation(seq)
    if problem:
        raise AssertionError(f"odd sequence {seq.indices} of {t}{n} violates: {problem}")
    return seq


def _odd_sequence_violation(q: OddSequence) -> str | None:
    if q.excluded:
        return None
    n, k, t = q.rank, q.k, q.lie_type
    s = q.s
    top = {"C": n - 1, "B": n}.get(t, n - 3 if q.d_case == "case1" else n - 2)
    if k and q.indices[-1] > top:
        return f"i_k <= {top}"
    span = k - 1 if t == "D" and q.d_case == "case1" else k - 2
    for l in range(1, span + 1):
        if s(l) > s(l + 2) if l + 2 <= k or q.d_case == "case1" else False:
            return f"s_{l} <= s_{l + 2}"
    if t == "C" or t == "D" and q.d_case == "case1":
        even_class = (k - 1) % 2 if t == "C" else (k + 1) % 2
    else:
        even_class = k % 2
    last = k + 1 if q.d_case == "case1" else k
    for l in range(1, last + 1):
        if l % 2 == even_class and s(l) % 2:
            return f"s_{l} even"
    if q.d_case == "case1":
        for l in range(1, k + 1):
            if l % 2 == k % 2 and s(l) > 2:
                return f"s_{l} <= 2"
    elif k >= 2:
        bound = 2 * (n - q.indices[-1]) + (1 if t == "B" else 0)
        if s(k - 1) > bound:
            return f"s_(k-1) <= {bound}"
    return None


def is_special_by_gaps(q: OddSequence) -> bool:
    """Specialness read off the gaps s_l of an odd sequence (types B, C, D).

    Out-of-range gaps follow these conventions: s_0 = 0, the gap just past
    the last one equals the bound on s_(k-1) (2(n - i_k), plus 1 for B),
    and gaps further out compare as -inf on the left and +inf on the right.
    """
    t, k = q.lie_type, q.k
    if t == "A" or q.excluded or k == 0:
        return True
    last = k + 1 if q.d_case == "case1" else k
    inf = float("inf")

    def s(l):
        if l == 0:
            return 0
        if l < 0:
            return -inf
        if l <= last:
            return q.s(l)
        if l == last + 1:
            return 2 * (q.rank - q.i(k)) + (1 if t == "B" else 0)
        return inf

    if t == "B":
        if k % 2 or s(1) % 2 == 0:
            return False
        cls, top = 0, k - 2
    else:
        if s(1) % 2:
            return False
        cls = (k - 1) % 2 if t == "C" or q.d_case == "case1" else k % 2
        top = k
    for u in range(1, top + 1):
        if u % 2 != cls or not s(u - 2) < s(u):
            continue
        v = u
        while v + 2 <= top and s(v + 2) == s(u):
            v += 2
        if s(u) < s(v + 2) and (s(v + 1) - s(u - 1)) % 2:
            return False
    return True


def partitions(total: int, max_part: int | None = None):
    """All partitions of `total` as weakly decreasing tuples."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def _distinct_partitions(total: int, parity: int | None = None, max_part: int | None = None):
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        if parity is not None and first % 2 != parity:
            continue
        for rest in _distinct_partitions(total - first, parity, first - 1):
            yield (first,) + rest


def enumerate_inputs(lie_type: str, rank: int) -> list[PartitionInput]:
    check_type(lie_type, rank)
    out: list[PartitionInput] = []
    if lie_type == "A":
        return [PartitionInput("A", rank, mu) for mu in partitions(rank + 1)]
    if lie_type == "C":
        for a in range(rank, -1, -1):
            for mu in partitions(a):
                for nu in _distinct_partitions(rank - a):
                    out.append(PartitionInput("C", rank, mu, nu))
        return out
    total = divisor_total(lie_type, rank)
    for a in range(total // 2, -1, -1):
        for mu in partitions(a):
            for nu in _distinct_partitions(total - 2 * a, parity=1):
                if lie_type == "D" and not nu and all(m % 2 == 0 for m in mu):
                    out += [PartitionInput("D", rank, mu, nu, v) for v in VARIANTS]
                else:
                    out.append(PartitionInput(lie_type, rank, mu, nu))
    return out


__all__ = [
    "InvalidInput",
    "OddSequence",
    "PartitionInput",
    "VARIANTS",
    "WeightedDiagram",
    "diagram_from_divisors",
    "diagram_from_input",
    "divisors_from_input",
    "enumerate_inputs",
    "input_from_divisors",
    "is_odd",
    "is_special",
    "is_special_by_transpose",
    "is_special_by_gaps",
    "is_special_divisors",
    "is_zero",
    "odd_sequence",
    "partitions",
    "phi_d",
    "reduce_step",
    "reduce_to_odd",
    "xi_sequence",
]
