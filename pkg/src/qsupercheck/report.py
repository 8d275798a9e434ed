"""Deterministic sweep reports in JSON and CSV.

Results are sorted by (check id, canonical parameter string) before
serialization, so re-running a sweep with the same seed and flags yields
a byte-identical body once the elapsed fields are set aside.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import __version__
from .results import CheckResult, Status, canonical_params


@dataclass
class SweepPlan:
    checks: list[tuple[str, dict]]
    seed: int
    trials: int
    fast_mode: bool
    fast_primes: tuple[int, ...] = ()
    suite: str | None = None

    def instance_count(self) -> int:
        return len(self.checks)

    def to_dict(self) -> dict:
        plan = {
            "seed": self.seed,
            "trials": self.trials,
            "fast_mode": self.fast_mode,
            "instances": self.instance_count(),
        }
        if self.fast_mode:
            plan["fast_primes"] = list(self.fast_primes)
        if self.suite:
            plan["suite"] = self.suite
        else:
            plan["checks"] = [
                {"id": cid, "params": {k: list(v) if isinstance(v, tuple) else v
                                       for k, v in sorted(params.items())}}
                for cid, params in self.checks
            ]
        return plan


@dataclass
class Report:
    plan: SweepPlan
    results: list[CheckResult] = field(default_factory=list)
    total_elapsed_ms: float = 0.0

    def sorted_results(self) -> list[CheckResult]:
        return sorted(self.results, key=CheckResult.sort_key)

    def summary(self) -> dict:
        counts = {"holds": 0, "fails": 0, "skipped": 0}
        for r in self.results:
            if r.status is Status.HOLDS:
                counts["holds"] += 1
            elif r.status is Status.FAILS:
                counts["fails"] += 1
            else:
                counts["skipped"] += 1
        return counts

    def to_dict(self) -> dict:
        return {
            "version": __version__,
            "plan": self.plan.to_dict(),
            "results": [r.to_dict() for r in self.sorted_results()],
            "summary": self.summary(),
            "total_elapsed_ms": round(self.total_elapsed_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "params", "status", "elapsed_ms"])
        for r in self.sorted_results():
            writer.writerow([r.check_id, canonical_params(r.params),
                             r.status.value, round(r.elapsed_ms, 3)])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown format {fmt!r}")

    @property
    def has_failures(self) -> bool:
        return self.summary()["fails"] > 0
