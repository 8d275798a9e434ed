"""Outcome records shared by every check in the catalog."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Status(enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    SKIPPED_PRECONDITION = "SKIPPED_PRECONDITION"


@dataclass
class CheckResult:
    """One verification outcome.

    ``witness`` is mandatory for FAILS (the difference polynomial or the
    offending value); ``note`` flags boundary cases accepted outside the
    documented parameter range.
    """

    check_id: str
    params: dict
    status: Status
    witness: str | None = None
    note: str | None = None
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status is Status.FAILS and self.witness is None:
            raise ValueError("FAILS results must carry a witness")

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAILS

    def params_key(self) -> str:
        return canonical_params(self.params)

    def sort_key(self):
        return (self.check_id, self.params_key())

    def to_dict(self) -> dict:
        out = {
            "id": self.check_id,
            "params": _jsonable_params(self.params),
            "status": self.status.value,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


def canonical_params(params: dict) -> str:
    parts = []
    for key in sorted(params):
        value = params[key]
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        parts.append(f"{key}={value}")
    return ";".join(parts)


def _jsonable_params(params: dict) -> dict:
    return {
        k: list(v) if isinstance(v, tuple) else v
        for k, v in sorted(params.items())
    }


def skipped(check_id: str, params: dict, reason: str) -> CheckResult:
    return CheckResult(check_id, params, Status.SKIPPED_PRECONDITION, note=reason)


def holds(check_id: str, params: dict, note: str | None = None) -> CheckResult:
    return CheckResult(check_id, params, Status.HOLDS, note=note)


def fails(check_id: str, params: dict, witness: str) -> CheckResult:
    return CheckResult(check_id, params, Status.FAILS, witness=witness)
