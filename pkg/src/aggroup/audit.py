"""Outcome records shared by every theorem/law check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
OUT_OF_SCOPE = "out-of-scope"


class InternalInvariantError(RuntimeError):
    """A property that the mathematics guarantees did not hold."""


@dataclass
class Audit:
    name: str
    status: str
    detail: str = ""
    witness: Any = None
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.detail:
            d["detail"] = self.detail
        if self.witness is not None:
            d["witness"] = self.witness
        d.update(self.extra)
        return d


def passed(name, detail="", witness=None, **extra) -> Audit:
    return Audit(name, PASS, detail, witness, extra=extra)


def failed(name, detail, witness=None, **extra) -> Audit:
    return Audit(name, FAIL, detail, witness, extra=extra)


def out_of_scope(name, reason, **extra) -> Audit:
    return Audit(name, OUT_OF_SCOPE, reason, extra=extra)
