"""Corpus report entities – pure data, no IO."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Scale(str, Enum):
    """Suite bound presets; SMALL lowers every bound for quick runs."""

    SMALL = "small"
    DEFAULT = "default"


@dataclass(frozen=True)
class Check:
    """One expected-versus-computed comparison inside a suite."""

    description: str
    expected: str
    computed: str
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "description": self.description,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Check":
        return cls(
            description=d["description"],
            expected=d.get("expected", ""),
            computed=d.get("computed", ""),
            passed=d.get("pass", False),
        )


@dataclass
class SuiteReport:
    suite: str
    scale: Scale
    checks: list[Check] = field(default_factory=list)
    timing: float = 0.0  # seconds

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, *, include_timing: bool = False) -> dict[str, Any]:
        d: dict[str, Any] = {
            "suite": self.suite,
            "scale": self.scale.value,
            "pass": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
        if include_timing:
            d["timing"] = round(self.timing, 3)
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "SuiteReport":
        return cls(
            suite=d["suite"],
            scale=Scale(d.get("scale", Scale.DEFAULT.value)),
            checks=[Check.from_dict(c) for c in d.get("checks", [])],
            timing=d.get("timing", 0.0),
        )
