"""Pass/fail reports shared by the verification suites and the CLI."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

from .scalar import Scalar


def _serial(value: Any) -> Any:
    if isinstance(value, Scalar):
        return value.to_json()
    return value


def _show(value: Any) -> str:
    if isinstance(value, Scalar):
        return value.format()
    return str(value)


@dataclass
class Check:
    name: str
    passed: bool
    expected: Any = None
    actual: Any = None
    seconds: float = 0.0
    detail: str = ""

    def to_json(self, timing: bool = True) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.expected is not None:
            out["expected"] = _serial(self.expected)
        if self.actual is not None:
            out["actual"] = _serial(self.actual)
        if self.detail:
            out["detail"] = self.detail
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name}"
        if not self.passed and self.expected is not None:
            text += f"  expected {_show(self.expected)}, got {_show(self.actual)}"
        if self.detail:
            text += f"  ({self.detail})"
        return text


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, expected=None, actual=None, seconds=0.0, detail="") -> Check:
        check = Check(name, bool(passed), expected, actual, seconds, detail)
        self.checks.append(check)
        return check

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self, timing: bool = True) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": sum(not c.passed for c in self.checks),
            "checks": [c.to_json(timing) for c in self.checks],
        }

    def format_text(self) -> str:
        lines = [self.title]
        lines += ["  " + c.line() for c in self.checks]
        n_ok = sum(c.passed for c in self.checks)
        lines.append(f"{n_ok}/{len(self.checks)} checks passed")
        return "\n".join(lines)


@contextmanager
def timed():
    """Yields a one-element list that receives the elapsed seconds."""
    box = [0.0]
    start = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = time.perf_counter() - start
