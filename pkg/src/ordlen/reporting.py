"""Check results and their text/JSON renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    evidence: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"CHECK {self.name} {status}"
        if self.detail:
            out += f" {self.detail}"
        return out

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.evidence:
            out["evidence"] = self.evidence
        return out


def render_results(results: list[CheckResult], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(
            {
                "checks": [r.to_json() for r in results],
                "passed": sum(r.passed for r in results),
                "failed": sum(not r.passed for r in results),
            },
            indent=2,
            default=str,
        )
    lines = [r.line() for r in results]
    bad = sum(not r.passed for r in results)
    lines.append(f"{len(results) - bad}/{len(results)} checks passed")
    return "\n".join(lines)


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)
