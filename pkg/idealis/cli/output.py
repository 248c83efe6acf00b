"""Output documents: pydantic models for JSON, rich tables for terminals, CSV."""

import csv
import json
import sys
from typing import Literal, TextIO

from pydantic import BaseModel, Field, TypeAdapter
from rich.console import Console
from rich.table import Table

from ..classify import PREDICATES, Classification, alias_of
from ..core import Ideal, RingSpec, format_ideal, format_ring
from ..oracle import PredicateResult, Witness
from ..theorems import CheckReport, Counterexample

SCHEMA_VERSION = "1.0"

Format = Literal["json", "table", "csv"]


class WitnessModel(BaseModel):
    kind: str
    items: list[str]
    failed_disjuncts: list[str]
    parameter: int | None = None

    @classmethod
    def of(cls, witness: Witness | None, ring: RingSpec) -> "WitnessModel | None":
        if witness is None:
            return None
        return cls(
            kind=witness.kind,
            items=witness.describe(ring),
            failed_disjuncts=list(witness.failed_disjuncts),
            parameter=witness.parameter,
        )


class ClassificationModel(BaseModel):
    prime: bool
    primary: bool
    radical: bool
    irreducible: bool
    strongly_irreducible: bool
    two_irreducible: bool
    strongly_two_irreducible: bool
    singly_strongly_two_irreducible: bool
    two_absorbing: bool
    two_absorbing_primary: bool
    provenance: dict[str, str] = Field(description="predicate -> structural:<rule> | oracle | transfer-oracle")

    @classmethod
    def of(cls, c: Classification) -> "ClassificationModel":
        return cls(**c.verdicts(), provenance={p: c.provenance[p] for p in PREDICATES})


class ClassifyPayload(BaseModel):
    ring: str
    ideal: str
    engine: str
    classification: ClassificationModel


class SurveyRow(BaseModel):
    ideal: str
    classification: ClassificationModel


class SurveyPayload(BaseModel):
    ring: str
    engine: str
    rows: list[SurveyRow]


class WitnessPayload(BaseModel):
    ring: str
    ideal: str
    predicate: str
    searched_ring: str = Field(description="finite ring the search ran in (differs from ring under transfer)")
    holds: bool
    cases_checked: int
    witness: WitnessModel | None = None
    decomposition: list[str] | None = None


class CounterexampleModel(BaseModel):
    ring: str
    ideals: list[str]
    detail: str
    witness: WitnessModel | None = None

    @classmethod
    def of(cls, c: Counterexample | None) -> "CounterexampleModel | None":
        if c is None:
            return None
        witness = None
        if c.witness is not None:
            witness = WitnessModel(
                kind=c.witness.kind,
                items=list(c.witness_items),
                failed_disjuncts=list(c.witness.failed_disjuncts),
                parameter=c.witness.parameter,
            )
        return cls(ring=c.ring, ideals=list(c.ideals), detail=c.detail, witness=witness)


class ReportModel(BaseModel):
    theorem_id: str
    rings_tested: list[str]
    cases: int
    status: Literal["pass", "fail", "error"]
    counterexample: CounterexampleModel | None = None
    message: str | None = None

    @classmethod
    def of(cls, r: CheckReport) -> "ReportModel":
        return cls(
            theorem_id=r.theorem_id,
            rings_tested=list(r.rings_tested),
            cases=r.cases,
            status=r.status,
            counterexample=CounterexampleModel.of(r.counterexample),
            message=r.message,
        )


class VerifyPayload(BaseModel):
    status: Literal["pass", "fail", "error"]
    mutate: bool
    reports: list[ReportModel]


class OutputDocument(BaseModel):
    schema_version: str = SCHEMA_VERSION
    command: Literal["classify", "survey", "verify", "witness"]
    payload: ClassifyPayload | SurveyPayload | VerifyPayload | WitnessPayload


REPORT_LIST = TypeAdapter(list[ReportModel])


def output_schema() -> dict:
    return OutputDocument.model_json_schema()


def emit_json(document: OutputDocument, out: TextIO | None = None) -> None:
    out = out or sys.stdout
    out.write(document.model_dump_json(indent=2))
    out.write("\n")


def emit_schema(out: TextIO | None = None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(output_schema(), indent=2, ensure_ascii=False))
    out.write("\n")


def reports_json(reports: list[CheckReport]) -> bytes:
    return REPORT_LIST.dump_json([ReportModel.of(r) for r in reports], indent=2)


def _console() -> Console:
    return Console(file=sys.stdout, highlight=False, soft_wrap=True)


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


def provenance_summary(c: ClassificationModel) -> str:
    """Distinct provenance tags in predicate order."""
    seen: list[str] = []
    for p in PREDICATES:
        if c.provenance[p] not in seen:
            seen.append(c.provenance[p])
    return "|".join(seen)


def print_classification(payload: ClassifyPayload) -> None:
    table = Table(title=f"{payload.ideal} in {payload.ring} ({payload.engine})")
    table.add_column("predicate")
    table.add_column("holds")
    table.add_column("provenance")
    c = payload.classification
    for p in PREDICATES:
        table.add_row(alias_of(p), _yes_no(getattr(c, p)), c.provenance[p])
    _console().print(table)


def print_survey(payload: SurveyPayload) -> None:
    table = Table(title=f"Proper ideals of {payload.ring} ({payload.engine})")
    table.add_column("ideal")
    for p in PREDICATES:
        table.add_column(alias_of(p))
    for row in payload.rows:
        table.add_row(row.ideal, *(_yes_no(getattr(row.classification, p)) for p in PREDICATES))
    _console().print(table)


def write_survey_csv(payload: SurveyPayload, out: TextIO | None = None) -> None:
    writer = csv.writer(out or sys.stdout, lineterminator="\n")
    writer.writerow(["ideal", *PREDICATES, "provenance"])
    for row in payload.rows:
        c = row.classification
        writer.writerow(
            [row.ideal, *(str(getattr(c, p)).lower() for p in PREDICATES), provenance_summary(c)]
        )


def print_reports(payload: VerifyPayload) -> None:
    table = Table(title=f"Theorem checks: {payload.status}" + (" (mutation mode)" if payload.mutate else ""))
    table.add_column("check")
    table.add_column("cases", justify="right")
    table.add_column("status")
    table.add_column("detail")
    for r in payload.reports:
        detail = r.message or ""
        if r.counterexample is not None:
            ce = r.counterexample
            detail = f"{ce.ring} {', '.join(ce.ideals)}: {ce.detail}"
        table.add_row(r.theorem_id, str(r.cases), r.status, detail)
    _console().print(table)


def print_witness(payload: WitnessPayload) -> None:
    out = sys.stdout
    if payload.holds:
        out.write(f"holds ({payload.cases_checked} cases checked)\n")
        if payload.decomposition:
            out.write(f"decomposition: {' ∩ '.join(payload.decomposition)}\n")
        return
    w = payload.witness
    out.write(f"{payload.predicate} fails for {payload.ideal} in {payload.ring}\n")
    if payload.searched_ring != payload.ring:
        out.write(f"searched in {payload.searched_ring}\n")
    out.write(f"witness ({w.kind}): {', '.join(w.items)}\n")
    if w.parameter is not None:
        out.write(f"parameter: {w.parameter}\n")
    out.write(f"failed: {'; '.join(w.failed_disjuncts)}\n")


def classification_payload(ring: RingSpec, i: Ideal, engine: str, c: Classification) -> ClassifyPayload:
    return ClassifyPayload(
        ring=format_ring(ring), ideal=format_ideal(i), engine=engine, classification=ClassificationModel.of(c)
    )


def witness_payload(
    ring: RingSpec, i: Ideal, predicate: str, searched: RingSpec, result: PredicateResult
) -> WitnessPayload:
    return WitnessPayload(
        ring=format_ring(ring),
        ideal=format_ideal(i),
        predicate=predicate,
        searched_ring=format_ring(searched),
        holds=result.holds,
        cases_checked=result.cases_checked,
        witness=WitnessModel.of(result.witness, searched),
        decomposition=[format_ideal(d) for d in result.decomposition] if result.decomposition else None,
    )
