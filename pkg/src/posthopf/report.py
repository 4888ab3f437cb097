"""Pass/fail reports produced by the verification suites."""
from __future__ import annotations

import json
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    range: str
    passed: bool
    cases: int = 0
    witness: str | None = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "range": self.range, "pass": self.passed, "cases": self.cases}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def record(self, name: str, range_desc: str, passed: bool, witness: str | None = None, cases: int = 1) -> Check:
        return self.add(Check(name, range_desc, bool(passed), cases, witness))

    def identity(
        self,
        name: str,
        range_desc: str,
        cases: Iterable[tuple[str, Any, Any]],
        fmt: Callable[[Any], str] = str,
    ) -> Check:
        """Compare ``lhs == rhs`` over ``(label, lhs, rhs)`` cases; stop at the first failure.

        Sides may be values or zero-argument callables (evaluated lazily).
        """
        n = 0
        for label, lhs, rhs in cases:
            n += 1
            if callable(lhs):
                lhs = lhs()
            if callable(rhs):
                rhs = rhs()
            if lhs != rhs:
                witness = f"{label}: lhs = {fmt(lhs)} ; rhs = {fmt(rhs)}"
                return self.add(Check(name, range_desc, False, n, witness))
        return self.add(Check(name, range_desc, True, n))

    def extend(self, other: Report, prefix: str = "") -> Report:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.range, c.passed, c.cases, c.witness))
        return self

    def to_dict(self) -> dict:
        return {"suite": self.suite, "identities": [c.to_dict() for c in self.checks], "pass": self.passed}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def render(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            lines.append(f"  [{status}] {c.name} ({c.range}; {c.cases} cases)")
            if c.witness:
                lines.append(f"      witness: {c.witness}")
        return "\n".join(lines)
