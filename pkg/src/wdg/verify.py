"""Checking both directions of the special/non-special dichotomy, diagram by diagram.

Special diagrams get an explicit lam that must be unimodular over Z, with an
independent {0,1} search as a second witness when the search space is small.
Non-special diagrams must have a Gram determinant that vanishes for every lam
over a field of characteristic 2: all 2^m assignments over GF(2) when m is
within the cap, otherwise random points of GF(2^k) (Schwartz-Zippel).
"""

from __future__ import annotations

import csv
import io
import json
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .construct import construct_lambda
from .diagrams import (
    PartitionInput,
    diagram_from_input,
    divisors_from_input,
    enumerate_inputs,
    is_odd,
    is_special,
    is_zero,
    reduce_to_odd,
)
from .fields import GF2k
from .gram import gram_structure
from .search import DEFAULT_CAP, exhaustive_gf2, search_unimodular

DEFAULT_TRIALS = 32
DEFAULT_FIELD = 32
DEFAULT_SEARCH_CAP = 16


@dataclass
class SZResult:
    identically_zero: bool | None
    trials: int
    field_exponent: int
    degree_bound: int
    error_bound: float | None
    witness: dict | None = None

    @property
    def verdict(self) -> str:
        if self.identically_zero is None:
            return "inconclusive"
        if self.identically_zero:
            return f"identically zero (error <= {self.error_bound:.3g})"
        return "nonzero witness"


def task_rng(seed: int, label: str) -> np.random.Generator:
    """Generator for one diagram, independent of scheduling order."""
    return np.random.default_rng([seed, zlib.crc32(label.encode())])


def schwartz_zippel_zero(d, field_exponent: int = DEFAULT_FIELD, trials: int = DEFAULT_TRIALS,
                         rng: np.random.Generator | None = None) -> SZResult:
    """Test whether det G, as a polynomial in the lam values, vanishes mod 2."""
    st = gram_structure(d)
    degree = st.size
    f = GF2k(field_exponent)
    if trials <= 0:
        return SZResult(None, 0, field_exponent, degree, None)
    rng = rng if rng is not None else np.random.default_rng(0)
    bound = (degree / f.order) ** trials
    if st.size == 0:
        return SZResult(False, 0, field_exponent, degree, bound, {"values": []})
    masks = st.coefficient_matrix() % 2 != 0
    for _ in range(trials):
        point = f.random(rng, size=len(st.targets))
        g = np.zeros((st.size, st.size), dtype=np.uint64)
        for t, v in enumerate(point):
            g[masks[t]] ^= v
        if f.det_np(g):
            witness = {"values": [{"root": list(r), "value": int(v)} for r, v in zip(st.targets, point)]}
            return SZResult(False, trials, field_exponent, degree, bound, witness)
    return SZResult(True, trials, field_exponent, degree, bound)


@dataclass
class Verdict:
    id: str
    lie_type: str
    rank: int
    source: dict
    weights: list[int]
    odd: bool
    special: bool
    phi1: int
    phi2: int
    construction_unimodular: bool | None = None
    provenance: str | None = None
    search_witness: bool | None = None
    degeneracy_method: str = "n/a"
    degenerate_always: bool | None = None
    error_bound: float | None = None
    trials: int = 0
    note: str | None = None
    error: str | None = None
    runtime: float = 0.0
    passed: bool = field(default=False)

    def to_json(self) -> dict:
        return asdict(self)


CSV_FIELDS = [
    "id", "lie_type", "rank", "weights", "odd", "special", "phi1", "phi2",
    "construction_unimodular", "provenance", "search_witness", "degeneracy_method",
    "degenerate_always", "error_bound", "trials", "note", "error", "runtime", "passed",
]


def verdicts_to_jsonl(verdicts: list[Verdict]) -> str:
    return "".join(json.dumps(v.to_json(), sort_keys=True) + "\n" for v in verdicts)


def verdicts_to_csv(verdicts: list[Verdict], fields: list[str] = CSV_FIELDS) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for v in verdicts:
        row = v.to_json()
        row["weights"] = "".join(map(str, v.weights))
        w.writerow(row)
    return buf.getvalue()


@dataclass(frozen=True)
class Settings:
    cap: int = DEFAULT_CAP
    search_cap: int = DEFAULT_SEARCH_CAP
    trials: int = DEFAULT_TRIALS
    field_exponent: int = DEFAULT_FIELD
    seed: int = 0


def check_input(p: PartitionInput, settings: Settings = Settings()) -> Verdict:
    start = time.perf_counter()
    d = diagram_from_input(p)
    st = gram_structure(d)
    v = Verdict(p.label(), p.lie_type, p.rank, p.to_json(), list(d.weights), is_odd(d),
                is_special(p), st.size, len(st.targets))
    try:
        if not v.odd and not is_zero(d):
            chain = reduce_to_odd(p.lie_type, divisors_from_input(p))
            v.note = "reduces to " + json.dumps([list(c) for c in chain[1:]])
        if v.special:
            _check_special(d, v, settings)
        else:
            _check_degenerate(d, p, v, settings)
    except Exception as exc:  # collected, not fatal for the run
        v.error = f"{type(exc).__name__}: {exc}"
        v.passed = False
    v.runtime = round(time.perf_counter() - start, 6)
    return v


def _check_special(d, v: Verdict, settings: Settings) -> None:
    c = construct_lambda(d, settings.cap)
    v.provenance = c.provenance
    v.construction_unimodular = c.det in (1, -1)
    v.passed = v.construction_unimodular
    if v.odd and v.phi2 <= settings.search_cap:
        v.search_witness = search_unimodular(d, settings.search_cap) is not None
        v.passed = v.passed and v.search_witness


def _check_degenerate(d, p: PartitionInput, v: Verdict, settings: Settings) -> None:
    if v.phi2 <= settings.cap:
        v.degeneracy_method = "exhaustive"
        v.degenerate_always = exhaustive_gf2(d, settings.cap)
        v.trials = 1 << v.phi2
    else:
        v.degeneracy_method = "schwartz_zippel"
        res = schwartz_zippel_zero(d, settings.field_exponent, settings.trials,
                                   task_rng(settings.seed, v.id))
        v.degenerate_always = res.identically_zero
        v.error_bound = res.error_bound
        v.trials = res.trials
    v.passed = bool(v.degenerate_always)


def _run(args):
    p, settings = args
    return check_input(p, settings)


def verify_theorem(lie_type: str, rank: int, settings: Settings = Settings(), jobs: int = 1,
                   odd_only: bool = False) -> list[Verdict]:
    inputs = enumerate_inputs(lie_type, rank)
    if odd_only:
        inputs = [p for p in inputs if is_odd(diagram_from_input(p))]
    work = [(p, settings) for p in inputs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            out = list(pool.map(_run, work, chunksize=4))
    else:
        out = [_run(w) for w in work]
    return sorted(out, key=lambda v: v.id)


__all__ = [
    "SZResult",
    "Settings",
    "Verdict",
    "check_input",
    "exhaustive_gf2",
    "schwartz_zippel_zero",
    "search_unimodular",
    "task_rng",
    "verdicts_to_csv",
    "verdicts_to_jsonl",
    "verify_theorem",
]
