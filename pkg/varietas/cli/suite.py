"""
suite.py — The reproduction suite behind `varietas paper-suite`.

Every identity set and expected value lives in config/paper_suite.yaml; this
module validates that file and runs each section in a fixed order, ending
with the summary table rebuilt from the section results. An entry may carry a
`discrepancy` note: its expected value is what the computation gives where
that differs from the published claim, and the note is printed with the record.
"""

from pathlib import Path
from typing import Literal, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError

from varietas.cli import checks
from varietas.cli.inputs import load_ids, load_ref, sign_signature
from varietas.cli.report import CheckRecord, RunReport
from varietas.core.errors import InputError
from varietas.core.logging import get_logger
from varietas.terms.parser import parse
from varietas.terms.printer import print_canonical
from varietas.terms.signature import DENDRIFORM, NOVIKOV

logger = get_logger()

Sign = Literal["minus", "plus"]


# ── Schema ───────────────────────────────────────────────────────────────────

class DimensionEntry(BaseModel):
    variety: str
    max_degree: int = Field(ge=1)
    expected: Optional[list[int]] = None
    slow: bool = False


class KoszulEntry(BaseModel):
    operad: str
    dual: str
    degree: int = Field(ge=1)
    expected: Optional[list[str]] = None
    slow: bool = False
    discrepancy: Optional[str] = None


class DualEntry(BaseModel):
    variety: str
    basis: Optional[list[str]] = None
    expected: Optional[str] = None


class PolarizationEntry(BaseModel):
    source: str
    convention: Literal["paper", "standard"] = "paper"
    expected: Optional[list[str]] = None
    discrepancy: Optional[str] = None


class DerivedEntry(BaseModel):
    variety: str
    sign: Sign
    generators: str
    max_degree: int = Field(4, ge=2)
    expected: Literal["equal", "strictly-contained", "incomparable"] = "equal"
    discrepancy: Optional[str] = None


class MemberEntry(BaseModel):
    variety: str
    sign: Sign
    identities: str
    baseline: Optional[str] = None
    slow: bool = False


class BasisCountEntry(BaseModel):
    name: str
    generators: str
    sign: Sign
    expected: Optional[list[int]] = None
    discrepancy: Optional[str] = None


class ExpansionEntry(BaseModel):
    name: str
    variety: str
    identity: str


class Expansions(BaseModel):
    derivation: list[ExpansionEntry] = []
    rota_baxter: list[ExpansionEntry] = []
    star: list[str] = []


class OppositeEntry(BaseModel):
    left: str
    right: str
    min_degree: int = 3
    max_degree: int = 5
    kernel_degree: int = 4


class Properties(BaseModel):
    ambient_max_degree: int = 4
    stability_max_degree: int = 4
    scaling_degree: int = 4
    scales: list[str] = ["2"]
    random_identities: int = 100
    seed: int = 0


class SummaryRow(BaseModel):
    type: str
    variety: str
    dual: str
    commutator: str
    anticommutator: str


class SuiteConfig(BaseModel):
    dimensions: list[DimensionEntry] = []
    koszul: list[KoszulEntry] = []
    duals: list[DualEntry] = []
    polarization: list[PolarizationEntry] = []
    derived: list[DerivedEntry] = []
    members: list[MemberEntry] = []
    basis_counts: list[BasisCountEntry] = []
    expansions: Expansions = Expansions()
    opposite: Optional[OppositeEntry] = None
    decomposition: list[str] = []
    properties: Optional[Properties] = None
    summary: list[SummaryRow] = []


def load_suite(path) -> SuiteConfig:
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except OSError as exc:
        raise InputError(f"cannot read suite file {path}: {exc.strerror}") from None
    except yaml.YAMLError as exc:
        raise InputError(f"suite file {path} is not valid YAML: {exc}") from None
    try:
        return SuiteConfig.model_validate(raw)
    except ValidationError as exc:
        raise InputError(f"suite file {path} is malformed: {exc}") from None


# ── Runner ───────────────────────────────────────────────────────────────────

class SuiteRunner:
    def __init__(self, config: SuiteConfig, base: Path, quick: bool = False):
        self.config = config
        self.base = base
        self.quick = quick
        self.report = RunReport("paper-suite" + (" --quick" if quick else ""))

    def _ids(self, ref: str, sign: str) -> list:
        return load_ids(ref, sign_signature(sign), self.base)

    def _run(self, name: str, fn, *args, discrepancy: Optional[str] = None, **kwargs) -> CheckRecord:
        record = checks.timed(name, fn, *args, **kwargs)
        if discrepancy:
            record.values["discrepancy"] = discrepancy
        logger.info("suite_check_finished", check=name, verdict=record.verdict, passed=record.passed)
        return self.report.add(record)

    def _skip(self, name: str):
        self.report.add(CheckRecord(name, "skipped", True))

    def run(self) -> RunReport:
        c = self.config
        results: dict[str, CheckRecord] = {}

        for d in c.dimensions:
            name = f"dim:{d.variety}"
            if d.slow and self.quick:
                self._skip(name)
                continue
            results[name] = self._run(name, lambda d=d: checks.dims_check(load_ref(d.variety), d.max_degree, d.expected))

        for k in c.koszul:
            name = f"koszul:{k.operad}"
            if k.slow and self.quick:
                self._skip(name)
                continue
            results[name] = self._run(
                name, lambda k=k: checks.koszul_check(load_ref(k.operad), load_ref(k.dual), k.degree, k.expected),
                discrepancy=k.discrepancy,
            )

        for d in c.duals:
            name = f"dual:{d.variety}"
            results[name] = self._run(
                name,
                lambda d=d: checks.dual_check(
                    load_ref(d.variety), d.basis, load_ref(d.expected) if d.expected else None
                ),
            )

        for p in c.polarization:
            name = f"polarize:{p.source}:{p.convention}"
            self._run(
                name,
                lambda p=p: checks.polarization_check(load_ref(p.source), p.convention, p.expected),
                discrepancy=p.discrepancy,
            )

        for d in c.derived:
            name = f"derived:{d.variety}:{d.sign}"
            results[name] = self._run(
                name,
                lambda d=d: checks.derived_check(
                    load_ref(d.variety), d.sign, self._ids(d.generators, d.sign), d.max_degree, d.expected
                ),
                discrepancy=d.discrepancy,
            )

        for m in c.members:
            name = f"member:{m.variety}:{m.sign}"
            if m.slow and self.quick:
                self._skip(name)
                continue
            self._run(
                name,
                lambda m=m: checks.member_check(
                    load_ref(m.variety),
                    m.sign,
                    self._ids(m.identities, m.sign),
                    self._ids(m.baseline, m.sign) if m.baseline else None,
                ),
            )

        for b in c.basis_counts:
            self._run(
                f"basis:{b.name}",
                lambda b=b: checks.basis_count_check(b.name, b.sign, self._ids(b.generators, b.sign), b.expected),
                discrepancy=b.discrepancy,
            )

        self._run_expansions()

        if c.opposite is not None:
            o = c.opposite
            self._run(
                f"opposite:{o.left}",
                lambda: checks.opposite_check(
                    load_ref(o.left), load_ref(o.right), o.min_degree, o.max_degree, o.kernel_degree
                ),
            )

        if c.decomposition:
            self._run("s3-decomposition", checks.decomposition_check, c.decomposition)

        if c.properties is not None:
            self._run_properties(c.properties)

        for row in c.summary:
            self.report.add(self._summary_row(row, results))

        logger.info("suite_finished", checks=len(self.report.records), failures=len(self.report.failures))
        return self.report

    def _run_expansions(self):
        e = self.config.expansions
        for x in e.derivation:
            self._run(
                f"derivation:{x.name}",
                lambda x=x: checks.derivation_check(x.name, load_ref(x.variety), parse(x.identity, NOVIKOV)),
            )
        for x in e.rota_baxter:
            self._run(
                f"rota-baxter:{x.name}",
                lambda x=x: checks.rota_baxter_check(x.name, load_ref(x.variety), parse(x.identity, DENDRIFORM)),
            )
        for ref in e.star:
            self._run(f"star:{ref}", lambda ref=ref: checks.star_check(load_ref(ref)))

    def _run_properties(self, p: Properties):
        words = [load_ref(name) for name in ("as1", "as2", "as3", "as4")]
        self._run("property:ambient-agreement", checks.ambient_check, words, p.ambient_max_degree)
        self._run(
            "property:sn-stability", checks.stability_check,
            words + [load_ref("dual-as3")], p.stability_max_degree,
        )
        self._run("property:scaling-invariance", checks.scaling_check, load_ref("as3"), p.scaling_degree, p.scales)
        self._run("property:rref", checks.rref_check, p.random_identities, p.seed)
        self._run("property:parse-print", checks.roundtrip_check, p.random_identities, p.seed)

    def _summary_row(self, row: SummaryRow, results: dict) -> CheckRecord:
        v = load_ref(row.variety)

        def outcome(key: str) -> str:
            record = results.get(key)
            if record is None or record.verdict == "skipped":
                return "not run"
            return record.verdict

        koszul = results.get(f"koszul:{row.variety}")
        if koszul is None or koszul.verdict == "skipped":
            koszul_text = "not run"
        elif "fails" in koszul.verdict:
            koszul_text = "No"
        else:
            koszul_text = "not refuted"
        cells = {
            "defining_identity": print_canonical(v.identities[0]),
            "dual": f"{row.dual} ({outcome(f'dual:{row.variety}')})",
            "koszul": koszul_text,
            "commutator": f"{row.commutator} ({outcome(f'derived:{row.variety}:minus')})",
            "anticommutator": f"{row.anticommutator} ({outcome(f'derived:{row.variety}:plus')})",
        }
        related = [
            results[k] for k in (
                f"dual:{row.variety}", f"derived:{row.variety}:minus", f"derived:{row.variety}:plus",
            ) if k in results
        ]
        noted = [
            r.name for r in related + ([koszul] if koszul is not None else []) if "discrepancy" in r.values
        ]
        cells["discrepancies"] = ", ".join(noted) or "none"
        passed = all(r.passed for r in related)
        return CheckRecord(f"summary:{row.type}", row.variety, passed, values=cells)


def run_suite(path, quick: bool = False) -> RunReport:
    path = Path(path)
    config = load_suite(path)
    return SuiteRunner(config, path.resolve().parent.parent, quick).run()
