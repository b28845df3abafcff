"""Pass/fail records shared by the identity suites."""
from __future__ import annotations

from dataclasses import dataclass

from .series import LaurentSeries


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    first_mismatch: int | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
            "detail": self.detail,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = "" if self.first_mismatch is None else f" (first mismatch at {self.first_mismatch})"
        return f"{status} {self.name}{where}"


def compare(name: str, lhs: LaurentSeries, rhs: LaurentSeries, order: int, start: int = 0) -> Verdict:
    """Exact coefficient comparison of two series on [start, order)."""
    bad = lhs.first_difference(rhs, start, order)
    return Verdict(name, bad is None, bad)
