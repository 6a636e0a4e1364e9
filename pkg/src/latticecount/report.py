"""Outcome record shared by all identity checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class Mismatch:
    location: Any
    expected: Any
    actual: Any


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    checked: str
    first_mismatch: Optional[Mismatch] = None
    details: tuple[str, ...] = ()

    @property
    def status(self) -> str:
        return "fail" if self.first_mismatch is not None else "pass"

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        out = {"identity": self.identity, "checked": self.checked, "status": self.status}
        if self.first_mismatch is not None:
            m = self.first_mismatch
            out["first_mismatch"] = {
                "location": str(m.location),
                "expected": str(m.expected),
                "actual": str(m.actual),
            }
        if self.details:
            out["details"] = list(self.details)
        return out


def compare_sequences(identity: str, checked: str, expected, actual, label=lambda i: i, details=()):
    """Report the first index where two equal-length sequences differ."""
    for i, (e, a) in enumerate(zip(expected, actual)):
        if e != a:
            return VerificationReport(identity, checked, Mismatch(label(i), e, a), tuple(details))
    if len(expected) != len(actual):
        i = min(len(expected), len(actual))
        return VerificationReport(identity, checked, Mismatch(label(i), len(expected), len(actual)), tuple(details))
    return VerificationReport(identity, checked, None, tuple(details))
