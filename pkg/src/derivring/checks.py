"""Small report types shared by the verification operations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One failed identity: which check, on which probe, with both sides."""

    kind: str
    probe: str
    lhs: object
    rhs: object


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a verification pass; violations are data, not errors."""

    checked: int
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self):
        return not self.violations
