"""Structured verification reports for the symbolic exemplars."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class Finding:
    claim: str
    ok: bool
    detail: str


@dataclass(slots=True)
class SymbolicReport:
    name: str
    findings: list[Finding] = field(default_factory=list)

    def add(self, claim: str, ok: bool, detail: str) -> None:
        self.findings.append(Finding(claim, ok, detail))

    @property
    def ok(self) -> bool:
        return all(f.ok for f in self.findings)

    def as_dict(self) -> dict:
        return {
            "exemplar": self.name,
            "ok": self.ok,
            "findings": [
                {"claim": f.claim, "ok": f.ok, "detail": f.detail}
                for f in self.findings],
        }
