"""Command-line front end.

Every subcommand validates its parameters, calls one library operation and
writes the result as JSON (default) or CSV. Exit status: 0 success, 2 bad
parameters, 3 a search ran out of budget (its report is still written).
"""
from __future__ import annotations

import argparse
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Sequence, TextIO

from . import reports
from .extremal import find_n0, verify_theorem
from .permutations import enumerate_snk
from .stirling import estimate_constants, harmonic_bounds_check, log_power_sum_check, stirling_record

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3

COMMANDS = ("stirling", "enumerate", "bounds", "verify", "sweep", "find-n0")


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    k: int | None = None
    t: int | None = None
    n_min: int | None = None
    n_max: int | None = None
    m: int | None = None
    budget_seconds: int = 300
    output_format: str | None = None  # None: JSON, or plain lines for enumerate
    output_path: str | None = None
    threads: int = 1
    timing: bool = True


class UsageError(ValueError):
    pass


def _need(cfg: RunConfig, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(cfg, n) is None]
    if missing:
        raise UsageError(f"{cfg.command} requires {', '.join(missing)}")


def validate(cfg: RunConfig) -> None:
    if cfg.command not in COMMANDS:
        raise UsageError(f"unknown command {cfg.command!r}")
    for name in ("n", "k", "t", "n_min", "n_max", "m"):
        value = getattr(cfg, name)
        if value is not None and value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
    if cfg.threads < 1:
        raise UsageError("--threads must be at least 1")
    if cfg.budget_seconds < 0:
        raise UsageError("--budget-seconds must be non-negative")
    if cfg.output_format not in (None, "json", "csv"):
        raise UsageError("--output-format must be json or csv")

    c = cfg.command
    if c == "stirling":
        _need(cfg, "k")
        if cfg.n is None:
            _need(cfg, "n_min", "n_max")
            if cfg.n_min > cfg.n_max:
                raise UsageError("--n-min exceeds --n-max")
    elif c == "enumerate":
        _need(cfg, "n", "k")
        if not 1 <= cfg.k <= cfg.n:
            raise UsageError("enumerate needs 1 <= k <= n")
    elif c == "bounds":
        _need(cfg, "n_max")
        if cfg.m is not None and cfg.k is not None:
            raise UsageError("bounds takes at most one of --m and --k")
        if cfg.k is not None:
            n_min = cfg.n_min if cfg.n_min is not None else max(cfg.k, 2)
            if cfg.k < 2 or n_min < max(cfg.k, 2) or cfg.n_max <= n_min:
                raise UsageError("bounds --k needs k >= 2 and max(k, 2) <= n-min < n-max")
        elif cfg.m is not None:
            if cfg.m < 1 or cfg.n_max < 10:
                raise UsageError("bounds --m needs m >= 1 and n-max >= 10")
        elif cfg.n_max < 3:
            raise UsageError("bounds needs n-max >= 3")
    elif c == "verify":
        _need(cfg, "n", "k", "t")
        if not 1 <= cfg.t < cfg.k <= cfg.n:
            raise UsageError("verify needs 1 <= t < k <= n")
    elif c == "sweep":
        _need(cfg, "k", "t", "n_max")
        n_min = cfg.n_min if cfg.n_min is not None else cfg.k
        if not 1 <= cfg.t < cfg.k <= n_min <= cfg.n_max:
            raise UsageError("sweep needs 1 <= t < k <= n-min <= n-max")
    elif c == "find-n0":
        _need(cfg, "k", "t", "n_max")
        if not 1 <= cfg.t < cfg.k <= cfg.n_max:
            raise UsageError("find-n0 needs 1 <= t < k <= n-max")


def _emit_records(out: TextIO, cfg: RunConfig, records: list[dict]) -> None:
    if cfg.output_format == "csv":
        for line in reports.csv_rows(records):
            out.write(line)
    elif len(records) == 1:
        out.write(reports.dumps(records[0]) + "\n")
    else:
        out.write(reports.dumps(records) + "\n")


def _run_stirling(cfg: RunConfig, out: TextIO) -> int:
    ns = [cfg.n] if cfg.n is not None else range(cfg.n_min, cfg.n_max + 1)
    _emit_records(out, cfg, [stirling_record(n, cfg.k) for n in ns])
    return EXIT_OK


def _run_enumerate(cfg: RunConfig, out: TextIO) -> int:
    perms = (str(pi) for pi in enumerate_snk(cfg.n, cfg.k))
    if cfg.output_format == "csv":
        for line in reports.csv_rows({"cycles": s} for s in perms):
            out.write(line)
    elif cfg.output_format is None:
        for s in perms:
            out.write(s + "\n")
    else:
        out.write(reports.dumps(list(perms)) + "\n")
    return EXIT_OK


def _run_bounds(cfg: RunConfig, out: TextIO) -> int:
    if cfg.k is not None:
        n_min = cfg.n_min if cfg.n_min is not None else max(cfg.k, 2)
        est = estimate_constants(cfg.k, n_min, cfg.n_max, threads=cfg.threads)
        _emit_records(out, cfg, [est.as_dict()])
        return EXIT_OK
    report = log_power_sum_check(cfg.m, cfg.n_max) if cfg.m is not None else harmonic_bounds_check(cfg.n_max)
    if cfg.output_format == "csv":
        head = {key: value for key, value in report.as_dict().items() if key != "checks"}
        _emit_records(out, cfg, [{**head, **c.as_dict()} for c in report.checks])
    else:
        out.write(reports.dumps(report.as_dict()) + "\n")
    return EXIT_OK


def _run_verify(cfg: RunConfig, out: TextIO) -> int:
    report = verify_theorem(cfg.n, cfg.k, cfg.t, budget=cfg.budget_seconds, threads=cfg.threads)
    _emit_records(out, cfg, [report.as_dict(timing=cfg.timing)])
    return EXIT_OK if report.optimal else EXIT_BUDGET


SWEEP_COLUMNS = (
    "n", "k", "t", "vertex_count", "bound_stirling", "max_size", "optimal",
    "is_stabilizer", "relation", "uniqueness_checked", "maximum_families",
)


def _run_sweep(cfg: RunConfig, out: TextIO) -> int:
    n_min = cfg.n_min if cfg.n_min is not None else cfg.k
    status = EXIT_OK

    def rows() -> Iterator[dict]:
        nonlocal status
        for n in range(n_min, cfg.n_max + 1):
            report = verify_theorem(n, cfg.k, cfg.t, budget=cfg.budget_seconds, threads=cfg.threads)
            if not report.optimal:
                status = EXIT_BUDGET
            yield report.as_dict(timing=cfg.timing)

    columns = SWEEP_COLUMNS + (("elapsed_ms",) if cfg.timing else ())
    if cfg.output_format == "csv":
        for line in reports.csv_rows(rows(), columns):
            out.write(line)
            out.flush()
    else:
        for record in rows():
            out.write(reports.dumps(record) + "\n")
            out.flush()
    return status


def _run_find_n0(cfg: RunConfig, out: TextIO) -> int:
    report = find_n0(cfg.k, cfg.t, cfg.n_max, budget=cfg.budget_seconds, threads=cfg.threads)
    data = report.as_dict(timing=cfg.timing)
    if cfg.output_format == "csv":
        _emit_records(out, cfg, [{"k": cfg.k, "t": cfg.t, **row} for row in data["rows"]])
    else:
        out.write(reports.dumps(data) + "\n")
    return EXIT_OK if all(r.optimal for r in report.rows) else EXIT_BUDGET


_DISPATCH = {
    "stirling": _run_stirling,
    "enumerate": _run_enumerate,
    "bounds": _run_bounds,
    "verify": _run_verify,
    "sweep": _run_sweep,
    "find-n0": _run_find_n0,
}


@contextmanager
def _open_output(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def run(cfg: RunConfig, out: TextIO | None = None) -> int:
    """Validate ``cfg`` and dispatch. Writes to ``out`` if given, else to the configured destination."""
    validate(cfg)
    handler = _DISPATCH[cfg.command]
    if out is not None:
        return handler(cfg, out)
    with _open_output(cfg.output_path) as fh:
        return handler(cfg, fh)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ekrperm",
        description="Exact checks of the EKR bound for permutations with k cycles.",
    )
    common = argparse.ArgumentParser(add_help=False)
    for flag in ("--n", "--k", "--t", "--n-min", "--n-max", "--m"):
        common.add_argument(flag, type=int)
    common.add_argument("--budget-seconds", type=int, default=300)
    common.add_argument("--output-format", choices=("json", "csv"))
    common.add_argument("--output-path")
    common.add_argument("--threads", type=int, help="defaults to $EKR_THREADS, else 1")
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock fields for byte-stable output")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "stirling": "unsigned Stirling numbers [n k] (one n, or --n-min..--n-max)",
        "enumerate": "list S_{n,k} in cycle notation",
        "bounds": "harmonic chain (default), log-power sums (--m) or ratio brackets (--k)",
        "verify": "exact maximum t-intersecting family vs the stabilizer bound",
        "sweep": "verify for n = n-min..n-max, one row per instance",
        "find-n0": "per-n table and empirical thresholds for fixed k, t",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def _threads(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("EKR_THREADS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"EKR_THREADS must be an integer, got {env!r}") from None
    return 1


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=args.command,
        n=args.n,
        k=args.k,
        t=args.t,
        n_min=args.n_min,
        n_max=args.n_max,
        m=args.m,
        budget_seconds=args.budget_seconds,
        output_format=args.output_format,
        output_path=args.output_path,
        threads=_threads(args.threads),
        timing=not args.no_timing,
    )
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        validate(cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
