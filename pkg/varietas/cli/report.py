"""
report.py — Run reports: one record per executed check.

Two renderings, both deterministic:
  text — a header line per check followed by indented "key: value" lines
  kv   — one line per check of space-separated key=value fields
Elapsed times are left out unless timings are requested, so repeated runs
produce identical bytes.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from varietas.linalg.rational import format_rational


def render_value(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return " ".join(render_value(v) for v in value)
    return str(value)


@dataclass
class CheckRecord:
    name: str
    verdict: str
    passed: bool
    inputs: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "passed": self.passed,
            "inputs": dict(self.inputs),
            "values": dict(self.values),
            "elapsed_ms": round(self.elapsed_ms, 1),
        }


@dataclass
class RunReport:
    command: str
    records: list = field(default_factory=list)

    def add(self, record: CheckRecord) -> CheckRecord:
        self.records.append(record)
        return record

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list:
        return [r for r in self.records if not r.passed]

    @property
    def discrepancies(self) -> list:
        return [r for r in self.records if "discrepancy" in r.values]

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    # ── Rendering ─────────────────────────────────────────────────────────────

    def render(self, fmt: str = "text", timings: bool = False) -> str:
        if fmt == "kv":
            return self._render_kv(timings)
        return self._render_text(timings)

    def _render_text(self, timings: bool) -> str:
        lines = [f"$ {self.command}"]
        for r in self.records:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"[{mark}] {r.name}: {r.verdict}")
            for key, value in r.inputs.items():
                lines.append(f"    {key}: {render_value(value)}")
            for key, value in r.values.items():
                lines.append(f"    {key}: {render_value(value)}")
            if timings:
                lines.append(f"    elapsed_ms: {r.elapsed_ms:.1f}")
        total = len(self.records)
        footer = f"{total - len(self.failures)}/{total} checks passed"
        if self.discrepancies:
            footer += f", {len(self.discrepancies)} against a documented discrepancy"
        lines.append(footer)
        return "\n".join(lines) + "\n"

    def _render_kv(self, timings: bool) -> str:
        lines = [f"command={_quote(self.command)}"]
        for r in self.records:
            fields = [
                f"check={_quote(r.name)}",
                f"verdict={_quote(r.verdict)}",
                f"passed={render_value(r.passed)}",
            ]
            for key, value in list(r.inputs.items()) + list(r.values.items()):
                fields.append(f"{key}={_quote(render_value(value))}")
            if timings:
                fields.append(f"elapsed_ms={r.elapsed_ms:.1f}")
            lines.append(" ".join(fields))
        lines.append(f"overall={'pass' if self.passed else 'fail'}")
        return "\n".join(lines) + "\n"


def _quote(text: str) -> str:
    if text and not any(ch in text for ch in ' "='):
        return text
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'
