"""Command line front end: ``hullcover {verify,optimize,fuzz,repro,render}``.

Exit codes: 0 success, 1 bad input (parse errors, unknown case, bad
flags), 2 curve does not cover the figure, 3 a checked inequality or a
reproduced claim failed, 4 the optimizer could not produce a covering
curve, 5 the fuzz campaign found a violation.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from . import io
from .curves import covers
from .errors import HullCoverError, InequalityViolation, InvalidInput, OptimizationFailed
from .geometry import DEFAULT_TOLERANCES, Tolerances
from .optimizer import OptimizerConfig, minimize_covering_curve
from .repro import CASES, ReproFailure
from .theorems import campaign, equality_case_check, main_inequality_check

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_COVERING = 2
EXIT_VIOLATION = 3
EXIT_OPTIMIZATION = 4
EXIT_FUZZ = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get("HULLCOVER_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"HULLCOVER_SEED must be an integer, got {raw!r}") from None


def _settings(args) -> tuple[Tolerances, dict]:
    tol, opt = DEFAULT_TOLERANCES, {}
    if args.config:
        tol, opt = io.load_config(args.config)
    overrides = {
        name: getattr(args, name)
        for name in ("eps_geom", "eps_contact", "eps_eq")
        if getattr(args, name) is not None
    }
    if overrides:
        tol = dataclasses.replace(tol, **overrides)
    return tol, opt


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, default=_jsonable))


def _jsonable(obj):
    if dataclasses.is_dataclass(obj):
        return dataclasses.asdict(obj)
    if isinstance(obj, tuple):
        return list(obj)
    if hasattr(obj, "value"):
        return obj.value
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def cmd_verify(args) -> int:
    tol, _ = _settings(args)
    K = io.load_figure(args.figure)
    c = io.load_curve(args.curve)
    report = covers(c, K, tol)
    out = {"coverage": dataclasses.asdict(report), "lower_bound": report.lower_bound}
    if not report.covered:
        out["classification"] = None
        _emit(out)
        return EXIT_NOT_COVERING
    try:
        main_inequality_check(c, K, tol)
    except InequalityViolation as exc:
        out["error"] = str(exc)
        _emit(out)
        return EXIT_VIOLATION
    out["classification"] = equality_case_check(c, K, tol).value
    _emit(out)
    return EXIT_OK


def cmd_optimize(args) -> int:
    tol, opt = _settings(args)
    K = io.load_figure(args.figure)
    opt.update(
        {
            k: v
            for k, v in (("n_vertices", args.vertices), ("restarts", args.restarts), ("seed", args.seed))
            if v is not None
        }
    )
    opt.setdefault("seed", _default_seed())
    if "n_vertices" not in opt:
        raise InvalidInput("--vertices is required (or optimizer.n_vertices in the config)")
    try:
        cfg = OptimizerConfig(**opt)
    except TypeError as exc:
        raise InvalidInput(f"bad optimizer settings: {exc}") from None
    try:
        res = minimize_covering_curve(K, cfg, tol)
    except OptimizationFailed as exc:
        print(f"optimization failed: {exc}", file=sys.stderr)
        return EXIT_OPTIMIZATION
    if args.out:
        io.save_curve(args.out, res.best_curve)
    _emit(
        {
            "config": dataclasses.asdict(cfg),
            "best_length": res.best_length,
            "lower_bound": res.lower_bound,
            "upper_bound": res.upper_bound,
            "best_restart": res.best_restart,
            "per_restart_lengths": res.per_restart_lengths,
            "best_curve": [list(v) for v in res.best_curve.vertices],
            "optimality": res.report,
        }
    )
    return EXIT_OK


def cmd_fuzz(args) -> int:
    tol, _ = _settings(args)
    seed = args.seed if args.seed is not None else _default_seed()
    failures = []

    def records():
        for rec in campaign(args.count, seed, tol):
            if rec.failure:
                failures.append(rec)
                print(f"violation at seed {rec.seed}: {rec.failure}", file=sys.stderr)
            yield rec

    if args.csv:
        n = io.write_campaign_csv(args.csv, records())
    else:
        n = sum(1 for _ in records())
    print(f"{n} cases, {len(failures)} violations")
    return EXIT_FUZZ if failures else EXIT_OK


def cmd_repro(args) -> int:
    tol, _ = _settings(args)
    if args.case not in CASES:
        print(f"unknown case {args.case!r}; choose from {', '.join(CASES)}", file=sys.stderr)
        return EXIT_INPUT
    kwargs = {"tol": tol}
    if args.case == "parallelogram" and args.t is not None:
        kwargs["t"] = args.t
    if args.case != "halfdisk":
        kwargs["optimize"] = not args.no_optimize
        if args.restarts is not None:
            kwargs["restarts"] = args.restarts
    try:
        rep = CASES[args.case](**kwargs)
    except ReproFailure as exc:
        print(str(exc))
        return EXIT_VIOLATION
    for line in rep.lines():
        print(line)
    for key, value in rep.values.items():
        print(f"{key} = {value!r}")
    svg = args.svg or f"repro_{args.case}.svg"
    Path(svg).write_text(io.render_svg(rep.figure, rep.curves.values(), title=rep.name))
    print(f"figure written to {svg}")
    return EXIT_OK


def cmd_render(args) -> int:
    K = io.load_figure(args.figure)
    curves = [io.load_curve(args.curve)] if args.curve else []
    Path(args.out).write_text(io.render_svg(K, curves))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with tolerances/optimizer sections")
    common.add_argument("--eps-geom", type=float)
    common.add_argument("--eps-contact", type=float)
    common.add_argument("--eps-eq", type=float)

    parser = _Parser(prog="hullcover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="check a curve against a figure")
    p.add_argument("figure")
    p.add_argument("curve")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("optimize", parents=[common], help="search for a short covering curve")
    p.add_argument("figure")
    p.add_argument("--vertices", type=int)
    p.add_argument("--restarts", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="write the best curve here as a curve file")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("fuzz", parents=[common], help="randomized property campaign")
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--seed", type=int)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("repro", parents=[common], help="reproduce a worked example")
    p.add_argument("--case", required=True)
    p.add_argument("--t", type=float)
    p.add_argument("--restarts", type=int)
    p.add_argument("--no-optimize", action="store_true")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_repro)

    p = sub.add_parser("render", parents=[common], help="draw a figure and curve as SVG")
    p.add_argument("figure")
    p.add_argument("curve", nargs="?")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HullCoverError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
