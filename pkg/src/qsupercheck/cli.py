"""Command-line front end: single checks, grid sweeps, catalog listing.

Exit codes: 0 for a clean run (HOLDS or SKIPPED only), 1 when any check
FAILS, 2 for usage errors, 3 when the report cannot be written.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .catalog import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    REGISTRY,
    RunOptions,
    SUITES,
    km_offset_lists,
    run_check,
)
from .gf import sample_fast_mode_primes
from .report import Report, SweepPlan
from .results import Status

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_WRITE = 3

_INT_FLAGS = ("d", "r", "n", "j", "k", "p", "m")


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsupercheck",
        description="Exact verification of q-supercongruences, summation "
                    "formulas, and their proof-step identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a single check")
    _add_check_flags(verify)
    verify.add_argument("--check", required=True, help="check id (see list)")

    sweep = sub.add_parser("sweep", help="run a grid of checks")
    _add_check_flags(sweep)
    sweep.add_argument("--check", help="check id for an inline grid")
    sweep.add_argument("--suite", choices=sorted(SUITES),
                       help="built-in instance grid")
    sweep.add_argument("--plan", help="JSON plan file")
    sweep.add_argument("--out", help="report path (default: stdout)")
    sweep.add_argument("--format", choices=("json", "csv"), default="json")
    sweep.add_argument("--jobs", type=int, default=1,
                       help="worker processes (default 1)")
    sweep.add_argument("--m-max", type=int, help="Karlsson-Minton: max m")
    sweep.add_argument("--nj-max", type=int,
                       help="Karlsson-Minton: max offset n_j")

    sub.add_parser("list", help="print the check catalog")
    return parser


def _add_check_flags(cmd: argparse.ArgumentParser) -> None:
    for flag in _INT_FLAGS:
        cmd.add_argument(f"--{flag}", type=str)
    cmd.add_argument("--n-list", type=str,
                     help="comma-separated offsets for the km check")
    cmd.add_argument("--expect", choices=("zero", "nonzero"))
    cmd.add_argument("--seed", type=int, default=DEFAULT_SEED)
    cmd.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    cmd.add_argument("--fast-mode", action="store_true",
                     help="re-run checks over two random 61-bit prime fields")


def _parse_int_values(text: str, flag: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise UsageError(f"--{flag} expects integers, got {text!r}")


def _collect_params(args, check_id: str, grid: bool):
    spec = REGISTRY.get(check_id)
    if spec is None:
        raise UsageError(f"unknown check id {check_id!r}")
    fixed: dict[str, object] = {}
    ranges: dict[str, list[int]] = {}
    for flag in _INT_FLAGS:
        raw = getattr(args, flag)
        if raw is None:
            continue
        if flag not in spec.param_names:
            raise UsageError(f"--{flag} does not apply to {check_id}")
        values = _parse_int_values(raw, flag)
        if len(values) == 1:
            fixed[flag] = values[0]
        elif grid:
            ranges[flag] = values
        else:
            raise UsageError(f"--{flag} takes one value under verify")
    if args.n_list is not None:
        if "n_list" not in spec.param_names:
            raise UsageError(f"--n-list does not apply to {check_id}")
        fixed["n_list"] = tuple(_parse_int_values(args.n_list, "n-list"))
    if args.expect is not None:
        if "expect" not in spec.param_names:
            raise UsageError(f"--expect does not apply to {check_id}")
        fixed["expect"] = args.expect
    if check_id == "km":
        fixed.setdefault("trials", args.trials)
        fixed.setdefault("seed", args.seed)
        if "n_list" in fixed:
            fixed.setdefault("m", len(fixed["n_list"]))
    missing = [name for name in spec.param_names
               if name not in fixed and name not in ranges
               and name not in ("j", "expect", "m", "n_list")]
    if check_id == "km" and "n_list" not in fixed:
        missing.append("n-list (or --m-max under sweep)")
    if missing:
        raise UsageError(
            f"{check_id} needs --" + ", --".join(missing))
    instances = [fixed]
    for flag, values in ranges.items():
        instances = [dict(inst, **{flag: v}) for inst in instances
                     for v in values]
    return instances


def _plan_from_args(args) -> SweepPlan:
    fast_primes: tuple[int, ...] = ()
    if args.fast_mode:
        fast_primes = sample_fast_mode_primes(random.Random(args.seed))
    if args.plan:
        try:
            with open(args.plan, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"unreadable plan {args.plan}: {exc}")
        checks = []
        for entry in raw.get("checks", []):
            cid = entry.get("id")
            if cid not in REGISTRY:
                raise UsageError(f"unknown check id {cid!r} in plan")
            params = {
                k: tuple(v) if isinstance(v, list) else v
                for k, v in entry.get("params", {}).items()
            }
            checks.append((cid, params))
        return SweepPlan(checks, raw.get("seed", args.seed),
                         raw.get("trials", args.trials),
                         args.fast_mode, fast_primes)
    if args.suite:
        checks = SUITES[args.suite](args.seed, args.trials)
        return SweepPlan(checks, args.seed, args.trials, args.fast_mode,
                         fast_primes, suite=args.suite)
    if not args.check:
        raise UsageError("sweep needs --suite, --plan, or --check")
    if args.check == "km" and args.m_max is not None:
        offsets = km_offset_lists(args.m_max, args.nj_max or 0)
        checks = [("km", {"m": len(t), "n_list": t, "trials": args.trials,
                          "seed": args.seed}) for t in offsets]
        return SweepPlan(checks, args.seed, args.trials, args.fast_mode,
                         fast_primes)
    instances = _collect_params(args, args.check, grid=True)
    return SweepPlan([(args.check, inst) for inst in instances],
                     args.seed, args.trials, args.fast_mode, fast_primes)


def _run_instance(task):
    check_id, params, options = task
    return run_check(check_id, params, options)


def _execute_plan(plan: SweepPlan, jobs: int) -> Report:
    options = RunOptions(seed=plan.seed, trials=plan.trials,
                         fast_primes=plan.fast_primes)
    start = time.perf_counter()
    tasks = [(cid, params, options) for cid, params in plan.checks]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_instance, tasks, chunksize=4))
    else:
        results = [_run_instance(task) for task in tasks]
    report = Report(plan, results)
    report.total_elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _cmd_verify(args) -> int:
    instances = _collect_params(args, args.check, grid=False)
    options = RunOptions(seed=args.seed, trials=args.trials)
    if args.fast_mode:
        options = RunOptions(args.seed, args.trials,
                             sample_fast_mode_primes(random.Random(args.seed)))
    result = run_check(args.check, instances[0], options)
    print(json.dumps(result.to_dict(), indent=2, sort_keys=True))
    return EXIT_FAILS if result.status is Status.FAILS else EXIT_OK


def _cmd_sweep(args) -> int:
    plan = _plan_from_args(args)
    print(f"running {plan.instance_count()} check instances", file=sys.stderr)
    report = _execute_plan(plan, args.jobs)
    body = report.render(args.format)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(body)
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return EXIT_WRITE
    else:
        sys.stdout.write(body)
    summary = report.summary()
    print(f"holds={summary['holds']} fails={summary['fails']} "
          f"skipped={summary['skipped']}", file=sys.stderr)
    return EXIT_FAILS if report.has_failures else EXIT_OK


def _cmd_list() -> int:
    width = max(len(cid) for cid in REGISTRY)
    for cid in sorted(REGISTRY):
        spec = REGISTRY[cid]
        params = ", ".join(spec.param_names)
        print(f"{cid:<{width}}  ({params})")
        print(f"{'':<{width}}  {spec.description}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_list()
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
