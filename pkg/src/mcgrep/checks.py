"""Pass/fail records shared by all verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable


@dataclass
class Check:
    name: str
    passed: bool
    cases: int = 0
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "detail": self.detail}


@dataclass
class Report:
    suite: str
    params: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": dict(sorted(self.params.items())),
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def check_all(name: str, cases: Iterable[tuple[object, Callable[[], bool]]]) -> Check:
    """Run labelled predicates in order and stop at the first failure."""
    n = 0
    for label, pred in cases:
        n += 1
        if not pred():
            return Check(name, False, n, f"fails at {label}")
    return Check(name, True, n)


def check_equal(name: str, cases: Iterable[tuple[object, Callable[[], tuple[object, object]]]]) -> Check:
    """Like check_all, but each case yields (lhs, rhs) and the failure detail
    records both sides."""
    n = 0
    for label, fn in cases:
        n += 1
        lhs, rhs = fn()
        if lhs != rhs:
            return Check(name, False, n, f"fails at {label}: {lhs!r} != {rhs!r}")
    return Check(name, True, n)
