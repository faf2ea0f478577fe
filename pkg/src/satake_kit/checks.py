"""A named pass/fail record shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


def all_passed(checks: list[Check]) -> bool:
    return all(c.passed for c in checks)


class VerificationError(AssertionError):
    """An identity that must hold exactly failed."""
