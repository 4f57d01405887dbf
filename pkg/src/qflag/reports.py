from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one exhaustive or sampled check.

    ``first_counterexample`` is the first failing case in basis order, so for
    exhaustive runs it is the minimal one.
    """

    check: str
    n: int
    tested: int = 0
    failed: int = 0
    first_counterexample: dict | None = None
    profile: str | None = None
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, passed: bool, witness=None) -> None:
        self.tested += 1
        if not passed:
            self.failed += 1
            if self.first_counterexample is None:
                self.first_counterexample = witness() if callable(witness) else witness

    def to_dict(self) -> dict:
        out = asdict(self)
        if not out["notes"]:
            del out["notes"]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        line = f"{self.check} n={self.n}: {self.tested - self.failed}/{self.tested} pass [{status}]"
        if self.profile:
            line += f" profile={self.profile}"
        if self.first_counterexample is not None:
            line += f" first counterexample: {self.first_counterexample}"
        return line
