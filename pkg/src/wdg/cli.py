"""Command-line interface: wdg {enumerate,gram,construct,verify,reduce,selftest}.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .construct import NotSpecial, construct_lambda
from .diagrams import (
    VARIANTS,
    InvalidInput,
    PartitionInput,
    diagram_from_input,
    divisors_from_input,
    enumerate_inputs,
    input_from_divisors,
    is_odd,
    is_special,
    reduce_to_odd,
    weights_from_divisors,
)
from .gram import CoefficientRing, LambdaAssignment, build_gram, check_assignment, det_exact, gram_structure
from .roots import LIE_TYPES, check_type
from .search import CapExceeded
from .verify import (
    CSV_FIELDS,
    DEFAULT_CAP,
    DEFAULT_TRIALS,
    Settings,
    verdicts_to_csv,
    verify_theorem,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    lie_type: str | None = None
    rank: int | None = None
    mu: tuple[int, ...] = ()
    nu: tuple[int, ...] = ()
    variant: str | None = None
    ring: str | None = None
    lambda_file: str | None = None
    exhaustive_cap: int = DEFAULT_CAP
    sz_trials: int = DEFAULT_TRIALS
    seed: int = 0
    jobs: int = 1
    fmt: str = "json"
    odd: bool = False
    special: bool = False
    timings: bool = False

    def __post_init__(self):
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")

    def partition(self) -> PartitionInput:
        if self.lie_type is None or self.rank is None:
            raise UsageError("--type and --rank are required")
        return PartitionInput(self.lie_type, self.rank, self.mu, self.nu, self.variant)


def _parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _default_seed() -> int:
    env = os.environ.get("WDG_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"WDG_SEED must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wdg", description="Weighted Dynkin diagrams and their Gram matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, partition=False):
        p.add_argument("--type", dest="lie_type", choices=LIE_TYPES, required=True)
        p.add_argument("--rank", type=int, required=True)
        if partition:
            p.add_argument("--mu", type=_parts, default=())
            p.add_argument("--nu", type=_parts, default=())
            p.add_argument("--variant", choices=VARIANTS)
        p.add_argument("--format", dest="fmt", choices=("json", "csv", "pretty"), default="json")

    p = sub.add_parser("enumerate", help="list every partition input with its diagram")
    common(p)
    p.add_argument("--odd", action="store_true", help="only odd diagrams")
    p.add_argument("--special", action="store_true", help="only special inputs")

    p = sub.add_parser("gram", help="Gram determinant for a given lam")
    common(p, partition=True)
    p.add_argument("--ring", help="z, gf2 or gf2k:K (default: the ring of the lam file)")
    p.add_argument("--lambda", dest="lambda_file", required=True, help="lam JSON file, - for stdin")

    p = sub.add_parser("construct", help="explicit unimodular lam for a special input")
    common(p, partition=True)
    p.add_argument("--exhaustive-cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("verify", help="check the dichotomy on every input of a type and rank")
    common(p)
    p.add_argument("--exhaustive-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--sz-trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include per-diagram runtimes")

    p = sub.add_parser("reduce", help="reduce a partition input to an odd diagram")
    common(p, partition=True)

    sub.add_parser("selftest", help="quick internal consistency checks")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    seed = args.seed if getattr(args, "seed", None) is not None else _default_seed()
    return RunConfig(
        command=args.command,
        lie_type=getattr(args, "lie_type", None),
        rank=getattr(args, "rank", None),
        mu=getattr(args, "mu", ()),
        nu=getattr(args, "nu", ()),
        variant=getattr(args, "variant", None),
        ring=getattr(args, "ring", None),
        lambda_file=getattr(args, "lambda_file", None),
        exhaustive_cap=getattr(args, "exhaustive_cap", DEFAULT_CAP),
        sz_trials=getattr(args, "sz_trials", DEFAULT_TRIALS),
        seed=seed,
        jobs=getattr(args, "jobs", 1),
        fmt=getattr(args, "fmt", "json"),
        odd=getattr(args, "odd", False),
        special=getattr(args, "special", False),
        timings=getattr(args, "timings", False),
    )


# -- output helpers ----------------------------------------------------------


def _emit(records: list[dict], fmt: str, out, fields: list[str] | None = None) -> None:
    if fmt == "json":
        for r in records:
            out.write(json.dumps(r, sort_keys=True) + "\n")
    elif fmt == "csv":
        import csv

        fields = fields or (sorted(records[0]) if records else [])
        w = csv.DictWriter(out, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    else:
        for r in records:
            out.write("  ".join(f"{k}={_pretty(v)}" for k, v in r.items()) + "\n")


def _pretty(v) -> str:
    if isinstance(v, list):
        return "".join(map(str, v)) if all(isinstance(x, int) and 0 <= x <= 9 for x in v) else json.dumps(v)
    return json.dumps(v) if isinstance(v, dict) else str(v)


# -- commands ----------------------------------------------------------------


def cmd_enumerate(cfg: RunConfig, out) -> int:
    check_type(cfg.lie_type, cfg.rank)
    records = []
    for p in enumerate_inputs(cfg.lie_type, cfg.rank):
        d = diagram_from_input(p)
        odd, special = is_odd(d), is_special(p)
        if cfg.odd and not odd or cfg.special and not special:
            continue
        st = gram_structure(d)
        records.append({
            "id": p.label(),
            "type": p.lie_type,
            "rank": p.rank,
            "mu": list(p.mu),
            "nu": list(p.nu),
            "d_variant": p.variant,
            "weights": list(d.weights),
            "odd": odd,
            "special": special,
            "phi1": st.size,
            "phi2": len(st.targets),
        })
    _emit(records, cfg.fmt, out)
    return EXIT_OK


def _read_lambda(path: str) -> LambdaAssignment:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        obj = json.loads(text)
        return LambdaAssignment.from_json(obj)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read lam from {path}: {exc}") from None


def cmd_gram(cfg: RunConfig, out) -> int:
    p = cfg.partition()
    d = diagram_from_input(p)
    lam = _read_lambda(cfg.lambda_file)
    if cfg.ring:
        ring = CoefficientRing.parse(cfg.ring)
        if ring != lam.ring:
            if lam.ring.kind != "Z":
                raise UsageError(f"cannot move lam from {lam.ring.name()} to {ring.name()}")
            lam = LambdaAssignment(ring, {r: ring.reduce(v) for r, v in lam.values.items()})
    try:
        check_assignment(d, lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = build_gram(d, lam)
    det = det_exact(g)
    record = {
        "id": p.label(),
        "ring": lam.ring.name(),
        "order": g.size,
        "det": det,
        "unimodular": det in (1, -1) if lam.ring.kind == "Z" else None,
        "nonzero": det != 0,
    }
    _emit([record], cfg.fmt, out)
    return EXIT_OK


def cmd_construct(cfg: RunConfig, out) -> int:
    p = cfg.partition()
    d = diagram_from_input(p)
    if not is_special(p):
        raise UsageError(f"{p.label()} is not special")
    c = construct_lambda(d, cfg.exhaustive_cap)
    record = {"id": p.label(), "weights": list(d.weights), **c.to_json()}
    if cfg.fmt == "json":
        out.write(json.dumps(record) + "\n")
    else:
        _emit([record], cfg.fmt, out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out) -> int:
    check_type(cfg.lie_type, cfg.rank)
    settings = Settings(cap=cfg.exhaustive_cap, trials=cfg.sz_trials, seed=cfg.seed)
    verdicts = verify_theorem(cfg.lie_type, cfg.rank, settings, jobs=cfg.jobs)
    header = {"kind": "header", "type": cfg.lie_type, "rank": cfg.rank, "seed": cfg.seed,
              "exhaustive_cap": cfg.exhaustive_cap, "sz_trials": cfg.sz_trials,
              "field_exponent": settings.field_exponent}
    rows = []
    for v in verdicts:
        row = v.to_json()
        if not cfg.timings:
            row.pop("runtime")
        rows.append(row)
    failed = sum(not v.passed for v in verdicts)
    summary = {"kind": "summary", "total": len(verdicts), "failed": failed}
    if cfg.fmt == "json":
        out.write(json.dumps(header, sort_keys=True) + "\n")
        for r in rows:
            out.write(json.dumps({"kind": "verdict", **r}, sort_keys=True) + "\n")
        out.write(json.dumps(summary, sort_keys=True) + "\n")
    elif cfg.fmt == "csv":
        out.write("# " + json.dumps(header, sort_keys=True) + "\n")
        fields = CSV_FIELDS if cfg.timings else [f for f in CSV_FIELDS if f != "runtime"]
        text = verdicts_to_csv(verdicts, fields)
        out.write(text)
    else:
        out.write(f"{cfg.lie_type}{cfg.rank}  seed={cfg.seed}\n")
        for v in verdicts:
            if v.special:
                how = f"unimodular via {v.provenance}" if v.construction_unimodular else "NOT unimodular"
                if v.search_witness is not None:
                    how += ", search " + ("found" if v.search_witness else "FAILED")
            else:
                how = f"degenerate ({v.degeneracy_method})" if v.degenerate_always else "NOT degenerate"
            mark = "ok  " if v.passed else "FAIL"
            out.write(f"{mark} {v.id:<40} {''.join(map(str, v.weights)):<10} "
                      f"{'special' if v.special else 'non-special':<12} {how}"
                      f"{'  ' + v.error if v.error else ''}\n")
        out.write(f"{len(verdicts) - failed}/{len(verdicts)} passed\n")
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_reduce(cfg: RunConfig, out) -> int:
    p = cfg.partition()
    chain = reduce_to_odd(p.lie_type, divisors_from_input(p))
    steps = []
    for divs in chain:
        if all(m == 1 for m in divs):
            steps.append({"divisors": list(divs), "weights": None, "zero": True})
            continue
        weights = weights_from_divisors(p.lie_type, divs, p.variant)
        steps.append({"divisors": list(divs), "weights": list(weights), "zero": not any(weights)})
    bottom = chain[-1]
    record = {
        "id": p.label(),
        "chain": steps,
        "reduced": list(bottom),
        "reduced_input": _input_json(p.lie_type, bottom, p.variant),
        "special": is_special(p),
    }
    _emit([record], cfg.fmt, out)
    return EXIT_OK


def _input_json(lie_type: str, divisors, variant) -> dict | None:
    try:
        return input_from_divisors(lie_type, divisors, variant).to_json()
    except (InvalidInput, ValueError):
        return None


def cmd_selftest(cfg: RunConfig, out) -> int:
    from .selftest import run_selftest

    results = run_selftest()
    for name, ok, detail in results:
        out.write(f"{'ok  ' if ok else 'FAIL'} {name}{': ' + detail if detail else ''}\n")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


COMMANDS = {
    "enumerate": cmd_enumerate,
    "gram": cmd_gram,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "selftest": cmd_selftest,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg, out)
    except (UsageError, NotSpecial, InvalidInput, CapExceeded, ValueError) as exc:
        print(f"wdg {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
