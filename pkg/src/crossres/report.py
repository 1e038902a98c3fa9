from __future__ import annotations

from dataclasses import dataclass, field
from typing import List


@dataclass
class Check:
    name: str
    passed: bool
    cases: int = 0
    witness: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.cases} cases)" if self.cases else ""
        out = f"check {self.name}: {status}{tail}"
        if not self.passed and self.witness:
            out += f"\n  witness: {self.witness}"
        return out


@dataclass
class Report:
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def render(self) -> str:
        return "\n".join(c.line() for c in self.checks)
