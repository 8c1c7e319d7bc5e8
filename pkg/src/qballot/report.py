"""Structured pass/fail reporting shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity instance at one parameter point.

    `asserted` distinguishes checks that must hold from observations that
    are recorded only (conjecture territory, known-mismatched sources).
    """

    id: str
    n: Optional[int]
    k: Optional[int]
    passed: bool
    detail: Optional[str] = None
    asserted: bool = True


@dataclass
class SuiteReport:
    """All results of one named suite plus its pass/report semantics."""

    suite: str
    results: list[CheckResult] = field(default_factory=list)
    mode: str = "assert"  # "assert": failures are failures; "report": recorded only

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if r.asserted)

    @property
    def counts(self) -> tuple[int, int]:
        ok = sum(1 for r in self.results if r.passed)
        return ok, len(self.results)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "mode": self.mode,
            "passed": self.passed,
            "results": [
                {
                    "id": r.id,
                    "n": r.n,
                    "k": r.k,
                    "pass": r.passed,
                    "detail": r.detail,
                }
                for r in self.results
            ],
        }

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            mark = "ok" if r.passed else ("MISMATCH" if not r.asserted else "FAIL")
            where = f"n={r.n}" if r.n is not None else ""
            if r.k is not None:
                where += f" k={r.k}"
            line = f"[{mark}] {r.id} {where}".rstrip()
            if r.detail and not r.passed:
                line += f": {r.detail}"
            out.append(line)
        ok, total = self.counts
        status = "pass" if self.passed else "fail"
        if self.mode == "report":
            status = "reported"
        out.append(f"suite {self.suite}: {ok}/{total} ok ({status})")
        return out
