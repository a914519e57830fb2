"""Pass/fail records produced by the identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Case:
    identity_id: str
    params: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "params": self.params,
            "pass": self.passed,
            "detail": self.detail,
        }


@dataclass
class Report:
    suite: str
    cases: list[Case] = field(default_factory=list)

    def add(self, identity_id: str, params: str, passed: bool, detail: str = "") -> bool:
        self.cases.append(Case(identity_id, params, bool(passed), detail))
        return bool(passed)

    def extend(self, other: "Report") -> None:
        self.cases.extend(other.cases)

    @property
    def counts(self) -> dict[str, int]:
        npass = sum(c.passed for c in self.cases)
        return {"pass": npass, "fail": len(self.cases) - npass}

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cases)

    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def passed(self, identity_id: str) -> bool:
        """True when every case with this id passed (and at least one exists)."""
        hits = [c for c in self.cases if c.identity_id == identity_id]
        return bool(hits) and all(c.passed for c in hits)

    def sorted(self) -> "Report":
        return Report(self.suite, sorted(self.cases, key=lambda c: (c.identity_id, c.params)))

    def to_json(self) -> dict:
        rep = self.sorted()
        return {
            "suite": rep.suite,
            "counts": rep.counts,
            "cases": [c.to_json() for c in rep.cases],
        }
