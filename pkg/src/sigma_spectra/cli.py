"""Command-line front end.

Subcommands: ``spectrum`` (feasible k, gaps), ``check`` (validate a
colouring file), ``construct`` (emit a constructive colouring), ``walk``
(recolouring walk with per-step verdicts) and ``verify`` (theorem grids).

Exit codes: 0 success / all pass; 1 invalid colouring, failed suite or
infeasible construction; 2 malformed arguments or input files; 3 budget
truncation in ``spectrum``.  ``SIGMA_SPECTRA_THREADS`` caps parallel k
decisions (0 = auto).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import time
from typing import Any, Sequence

from .constructions import (
    beta_colouring,
    layered_colouring,
    mono_colouring,
    spectrum_walk_steps,
)
from .core import (
    Colouring,
    HypergraphSpec,
    build_sigma,
    colouring_from_json,
    colouring_to_json,
)
from .engine import k_colourable, spectrum
from .errors import SigmaSpectraError, TheoremViolationError
from .validator import EdgeWitness, find_violation
from .verification import SUITES, run_suite

__all__ = ["RunReport", "main", "build_parser"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_TRUNCATED = 3


@dataclasses.dataclass(frozen=True)
class RunReport:
    """Envelope written (as JSON) by every subcommand."""

    command: str
    spec: dict[str, Any] | None
    result: Any
    complete: bool
    wall_time_s: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "spec": self.spec,
            "result": self.result,
            "complete": self.complete,
            "wall_time_s": self.wall_time_s,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunReport":
        return cls(
            command=data["command"],
            spec=data["spec"],
            result=data["result"],
            complete=data["complete"],
            wall_time_s=data["wall_time_s"],
        )


def _spec_to_dict(spec: HypergraphSpec) -> dict[str, Any]:
    return {
        "n": spec.n,
        "r": spec.r,
        "q": spec.q,
        "sigma": list(spec.sigma.parts),
        "alpha": spec.alpha,
        "beta": spec.beta,
    }


def _witness_to_dict(witness: EdgeWitness) -> dict[str, Any]:
    return {
        "class_tuple": list(witness.class_tuple),
        "part_assignment": list(witness.part_assignment),
        "per_class_choice": [
            sorted([c, m] for c, m in choice.items())
            for choice in witness.per_class_choice
        ],
        "distinct_colours": witness.distinct_colours,
    }


def _colouring_to_dict(colouring: Colouring) -> dict[str, Any]:
    return {
        "n": colouring.n,
        "q": colouring.q,
        "classes": [list(cls) for cls in colouring.classes],
    }


class UsageError(Exception):
    pass


def _add_spec_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--spec-file", help="JSON file with n, r, q, sigma, alpha, beta")
    sub.add_argument("--n", type=int)
    sub.add_argument("--r", type=int)
    sub.add_argument("--q", type=int)
    sub.add_argument("--sigma", help="comma-separated part sizes, e.g. 6,6")
    sub.add_argument("--alpha", type=int)
    sub.add_argument("--beta", type=int)


def _spec_from_args(args: argparse.Namespace) -> HypergraphSpec:
    if args.spec_file:
        try:
            with open(args.spec_file, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read spec file: {exc}") from exc
        fields = {"n", "r", "q", "sigma", "alpha", "beta"}
        if not isinstance(data, dict) or not fields <= set(data):
            raise UsageError(f"spec file needs fields {sorted(fields)}")
        n, r, q = data["n"], data["r"], data["q"]
        parts = data["sigma"]
        alpha, beta = data["alpha"], data["beta"]
    else:
        missing = [
            flag for flag in ("n", "r", "q", "sigma", "alpha", "beta")
            if getattr(args, flag) is None
        ]
        if missing:
            raise UsageError(
                "missing flags: " + ", ".join(f"--{m}" for m in missing)
            )
        n, r, q, alpha, beta = args.n, args.r, args.q, args.alpha, args.beta
        try:
            parts = [int(p) for p in args.sigma.split(",") if p != ""]
        except ValueError as exc:
            raise UsageError(f"cannot parse --sigma {args.sigma!r}") from exc
    try:
        sigma = build_sigma(parts)
    except SigmaSpectraError as exc:
        raise UsageError(str(exc)) from exc
    if sigma.r != r:
        raise UsageError(
            f"sigma parts sum to {sigma.r} but r={r} was given"
        )
    try:
        return HypergraphSpec(n=n, q=q, sigma=sigma, alpha=alpha, beta=beta)
    except (ValueError, SigmaSpectraError) as exc:
        raise UsageError(str(exc)) from exc


def _workers_from_env() -> int:
    raw = os.environ.get("SIGMA_SPECTRA_THREADS")
    if raw is None or raw == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        print(
            f"warning: ignoring non-integer SIGMA_SPECTRA_THREADS={raw!r}",
            file=sys.stderr,
        )
        return 1
    return value if value >= 0 else 1


def _emit(report: RunReport, output: str | None) -> None:
    text = json.dumps(report.to_dict(), indent=2, sort_keys=True)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_spectrum(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    t0 = time.perf_counter()
    try:
        result = spectrum(
            spec,
            k_max=args.k_max,
            node_budget=args.budget,
            workers=_workers_from_env(),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    wall = time.perf_counter() - t0
    if args.format == "csv":
        lines = ["k,feasible,nodes_explored"]
        feasible = set(result.feasible_k)
        unknown = set(result.unknown_k)
        for k in range(1, result.k_max + 1):
            verdict = (
                "true" if k in feasible
                else "unknown" if k in unknown
                else "false"
            )
            lines.append(f"{k},{verdict},{result.nodes_explored.get(k, 0)}")
        text = "\n".join(lines) + "\n"
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        report = RunReport(
            command="spectrum",
            spec=_spec_to_dict(spec),
            result=result.to_json_dict(),
            complete=result.complete,
            wall_time_s=wall,
        )
        _emit(report, args.output)
    return EXIT_OK if result.complete else EXIT_TRUNCATED


def _cmd_check(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    try:
        with open(args.colouring_file, encoding="utf-8") as fh:
            colouring = colouring_from_json(fh.read())
    except (OSError, json.JSONDecodeError, SigmaSpectraError, ValueError) as exc:
        raise UsageError(f"cannot read colouring file: {exc}") from exc
    t0 = time.perf_counter()
    try:
        witness = find_violation(spec, colouring)
    except SigmaSpectraError as exc:
        raise UsageError(str(exc)) from exc
    wall = time.perf_counter() - t0
    report = RunReport(
        command="check",
        spec=_spec_to_dict(spec),
        result={
            "valid": witness is None,
            "colour_count": colouring.colour_count,
            "witness": None if witness is None else _witness_to_dict(witness),
        },
        complete=True,
        wall_time_s=wall,
    )
    _emit(report, args.output)
    return EXIT_OK if witness is None else EXIT_FAIL


def _cmd_construct(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    t0 = time.perf_counter()
    try:
        if args.kind == "mono":
            if args.k is None:
                raise UsageError("--kind mono needs --k")
            colouring = mono_colouring(spec, args.k)
        elif args.kind == "layered":
            if args.k is None:
                raise UsageError("--kind layered needs --k")
            colouring = layered_colouring(spec, args.k)
        elif args.kind == "beta":
            colouring = beta_colouring(spec)
        else:  # engine
            if args.k is None:
                raise UsageError("--kind engine needs --k")
            found = k_colourable(spec, args.k, args.budget)
            if found is None:
                print(f"no colouring with exactly {args.k} colours",
                      file=sys.stderr)
                return EXIT_FAIL
            colouring = found
    except SigmaSpectraError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    wall = time.perf_counter() - t0
    if args.raw:
        text = colouring_to_json(colouring) + "\n"
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    report = RunReport(
        command="construct",
        spec=_spec_to_dict(spec),
        result={
            "kind": args.kind,
            "colouring": _colouring_to_dict(colouring),
            "colour_count": colouring.colour_count,
        },
        complete=True,
        wall_time_s=wall,
    )
    _emit(report, args.output)
    return EXIT_OK


def _cmd_walk(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    if args.start_file:
        try:
            with open(args.start_file, encoding="utf-8") as fh:
                start = colouring_from_json(fh.read())
        except (OSError, json.JSONDecodeError, SigmaSpectraError, ValueError) as exc:
            raise UsageError(f"cannot read start colouring: {exc}") from exc
    elif args.start_k is not None:
        found = k_colourable(spec, args.start_k, args.budget)
        if found is None:
            print(f"no colouring with exactly {args.start_k} colours",
                  file=sys.stderr)
            return EXIT_FAIL
        start = found
    else:
        raise UsageError("walk needs --start-file or --start-k")
    t0 = time.perf_counter()
    try:
        steps = spectrum_walk_steps(spec, start, args.direction, args.budget)
    except TheoremViolationError as exc:
        print(f"walk diagnostic: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SigmaSpectraError as exc:
        raise UsageError(str(exc)) from exc
    wall = time.perf_counter() - t0
    report = RunReport(
        command="walk",
        spec=_spec_to_dict(spec),
        result={
            "direction": args.direction,
            "start": _colouring_to_dict(start),
            "steps": [
                {
                    "kind": ws.step.kind,
                    "class_index": ws.step.class_index,
                    "colour_count": ws.colour_count,
                    "valid": ws.valid,
                    "colouring": _colouring_to_dict(ws.colouring),
                }
                for ws in steps
            ],
        },
        complete=True,
        wall_time_s=wall,
    )
    _emit(report, args.output)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite not in SUITES:
        print(
            f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    t0 = time.perf_counter()
    rows = run_suite(args.suite)
    wall = time.perf_counter() - t0
    width = max(len(row.name) for row in rows)
    for row in rows:
        mark = "PASS" if row.passed else "FAIL"
        print(f"{mark}  {row.name:<{width}}  {row.detail}")
    all_passed = all(row.passed for row in rows)
    print(f"{'OK' if all_passed else 'FAILED'}: {sum(r.passed for r in rows)}/"
          f"{len(rows)} rows passed in {wall:.1f}s")
    if args.output:
        report = RunReport(
            command="verify",
            spec=None,
            result={
                "suite": args.suite,
                "all_passed": all_passed,
                "rows": [dataclasses.asdict(row) for row in rows],
            },
            complete=True,
            wall_time_s=wall,
        )
        _emit(report, args.output)
    return EXIT_OK if all_passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigma-spectra",
        description="Exact constrained-colouring spectra of sigma-class hypergraphs",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_spectrum = subs.add_parser("spectrum", help="compute feasible k and gaps")
    _add_spec_flags(p_spectrum)
    p_spectrum.add_argument("--k-max", type=int, default=None)
    p_spectrum.add_argument("--budget", type=int, default=None,
                            help="node budget per k decision")
    p_spectrum.add_argument("--format", choices=("json", "csv"), default="json")
    p_spectrum.add_argument("--output", default=None)
    p_spectrum.set_defaults(func=_cmd_spectrum)

    p_check = subs.add_parser("check", help="validate a colouring file")
    _add_spec_flags(p_check)
    p_check.add_argument("--colouring-file", required=True)
    p_check.add_argument("--output", default=None)
    p_check.set_defaults(func=_cmd_check)

    p_construct = subs.add_parser("construct", help="emit a constructive colouring")
    _add_spec_flags(p_construct)
    p_construct.add_argument(
        "--kind", choices=("mono", "layered", "beta", "engine"), required=True
    )
    p_construct.add_argument("--k", type=int, default=None)
    p_construct.add_argument("--budget", type=int, default=None)
    p_construct.add_argument("--raw", action="store_true",
                             help="emit the bare colouring file instead of a report")
    p_construct.add_argument("--output", default=None)
    p_construct.set_defaults(func=_cmd_construct)

    p_walk = subs.add_parser("walk", help="recolouring walk with verdicts")
    _add_spec_flags(p_walk)
    p_walk.add_argument("--direction", choices=("up", "down"), required=True)
    p_walk.add_argument("--start-file", default=None)
    p_walk.add_argument("--start-k", type=int, default=None,
                        help="start from an engine colouring with this many colours")
    p_walk.add_argument("--budget", type=int, default=None)
    p_walk.add_argument("--output", default=None)
    p_walk.set_defaults(func=_cmd_walk)

    p_verify = subs.add_parser("verify", help="run a verification grid")
    p_verify.add_argument("--suite", required=True,
                          help=", ".join(sorted(SUITES)))
    p_verify.add_argument("--output", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
