"""Machine-readable verification reports.

Reports are deterministic for a fixed seed and backend: timing data is
attached only when explicitly requested, so the default JSON output is
byte-identical across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

ENGINE_VERSION = "0.1.0"
SCHEMA_VERSION = 1


@dataclass
class CheckResult:
    name: str
    statement: str
    samples: int
    passed: bool
    signs: dict = field(default_factory=dict)
    detail: str = ""
    expected: str = ""
    computed: str = ""
    elapsed_ms: float | None = None

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "name": self.name,
            "statement": self.statement,
            "samples": self.samples,
            "pass": self.passed,
        }
        if self.signs:
            d["signs"] = dict(sorted(self.signs.items()))
        if self.detail:
            d["detail"] = self.detail
        if self.expected or self.computed:
            d["expected"] = self.expected
            d["computed"] = self.computed
        if timing and self.elapsed_ms is not None:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d


@dataclass
class Report:
    backend: str
    seed: int
    checks: list = field(default_factory=list)
    ledger_signs: dict = field(default_factory=dict)
    ledger_notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "engine": ENGINE_VERSION,
            "backend": self.backend,
            "seed": self.seed,
            "pass": self.passed,
            "checks": [c.to_dict(timing) for c in self.checks],
            "sign_ledger": dict(sorted(self.ledger_signs.items())),
            "sign_notes": dict(sorted(self.ledger_notes.items())),
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False)

    def to_text(self, timing: bool = False) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = f"  [{c.detail}]" if c.detail and not c.passed else ""
            lines.append(f"{mark}  {c.name}  (samples={c.samples}){extra}")
            if c.signs:
                flips = {k: v for k, v in c.signs.items() if v < 0}
                if flips:
                    lines.append(f"      sign flips vs stated form: {flips}")
        lines.append("")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)
