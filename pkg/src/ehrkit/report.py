"""Structured verdicts shared by all theorem-level checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

STRICT = "strict"
EQUALITY = "equality"
VIOLATION = "violation"
NOT_APPLICABLE = "not-applicable"

STATUSES = (STRICT, EQUALITY, VIOLATION, NOT_APPLICABLE)


@dataclass(frozen=True)
class CheckReport:
    """Verdict of one check on one body.

    `values` carries the exact computed quantities in a deterministic order;
    on a violation they include the violating numbers, and `equality` always
    means the computed value matches `bound` exactly.
    """

    check: str
    status: str
    values: tuple[tuple[str, object], ...] = ()
    bound: Fraction | None = None
    witness: object | None = None
    detail: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        object.__setattr__(self, "values", tuple(self.values))

    def value(self, name: str):
        for key, val in self.values:
            if key == name:
                return val
        raise KeyError(name)

    @property
    def ok(self) -> bool:
        return self.status != VIOLATION
