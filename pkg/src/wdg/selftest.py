"""Fast consistency checks behind `wdg selftest`."""

from __future__ import annotations

import numpy as np

from .char2 import HYPOTHESES, alternating_kernel_dim, is_block_singular, random_singular_symmetric, random_spec
from .chevalley import jacobi_failures, realize_basis, string_failures
from .construct import construct_lambda
from .diagrams import diagram_from_input, enumerate_inputs, is_special
from .fields import GF2k
from .search import exhaustive_gf2


def _chevalley() -> tuple[bool, str]:
    bad = []
    for t, ranks in (("A", (1, 2, 3)), ("B", (2, 3)), ("C", (2, 3)), ("D", (3, 4))):
        for r in ranks:
            b = realize_basis(t, r)
            if jacobi_failures(b) or string_failures(b):
                bad.append(f"{t}{r}")
    return not bad, ", ".join(bad)


def _dichotomy() -> tuple[bool, str]:
    bad = []
    for t, ranks in (("A", (1, 2, 3, 4)), ("B", (2, 3, 4)), ("C", (2, 3, 4)), ("D", (3, 4))):
        for r in ranks:
            for p in enumerate_inputs(t, r):
                d = diagram_from_input(p)
                ok = construct_lambda(d).det in (1, -1) if is_special(p) else exhaustive_gf2(d)
                if not ok:
                    bad.append(p.label())
    return not bad, ", ".join(bad)


def _field() -> tuple[bool, str]:
    f = GF2k(16)
    rng = np.random.default_rng(0)
    xs = [int(x) for x in f.random(rng, size=50) if x]
    ok = all(f.mul(x, f.inv(x)) == 1 for x in xs)
    ok = ok and all(f.mul(a, b) == f.mul(b, a) for a, b in zip(xs, xs[1:]))
    return ok, ""


def _char2() -> tuple[bool, str]:
    rng = np.random.default_rng(0)
    ok = all(is_block_singular(random_spec(rng, h)) for h in HYPOTHESES for _ in range(20))
    ok = ok and all(alternating_kernel_dim(random_singular_symmetric(rng)) >= 2 for _ in range(20))
    return ok, ""


CHECKS = (
    ("chevalley structure constants", _chevalley),
    ("dichotomy up to rank 4", _dichotomy),
    ("GF(2^16) arithmetic", _field),
    ("characteristic 2 singularity", _char2),
)


def run_selftest() -> list[tuple[str, bool, str]]:
    out = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # reported, not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, detail))
    return out
