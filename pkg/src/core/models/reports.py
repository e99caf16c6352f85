"""
JSON wire models for command output.

Every document carries ``"schema": "pclosed/1"`` and the name of the command
that produced it. Field values that are field elements are canonical text.
"""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_ID = "pclosed/1"


class ReportBase(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_id: str = Field(SCHEMA_ID, alias="schema")
    command: str

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class CriterionReportModel(ReportBase):
    command: str = "check"
    p: int
    f: str
    g: str
    a: str = Field(..., description="Multiplier making (af, ag) divergence-free")
    c_f: str
    c_g: str
    c_f_root: str
    c_g_root: str
    obstruction: str
    p_closed: bool
    witness_a: Optional[str] = Field(None, description="a with D^p = a D, when computed")

    @classmethod
    def from_report(cls, report) -> "CriterionReportModel":
        return cls(
            p=report.p,
            f=str(report.f),
            g=str(report.g),
            a=str(report.a),
            c_f=str(report.c_f),
            c_g=str(report.c_g),
            c_f_root=str(report.c_f_root),
            c_g_root=str(report.c_g_root),
            obstruction=str(report.obstruction),
            p_closed=report.p_closed,
            witness_a=str(report.witness.a) if report.witness is not None else None,
        )


class MultiplierModel(ReportBase):
    command: str = "multiplier"
    p: int
    coeffs: List[str]
    a: str


class WitnessModel(ReportBase):
    command: str = "witness"
    p: int
    f: str
    g: str
    p_closed: bool
    a: Optional[str] = None


class DecompositionModel(ReportBase):
    command: str = "decompose"
    p: int
    f: str
    g: str
    h: str
    c_f: str
    c_g: str


class CartierModel(ReportBase):
    command: str = "cartier"
    p: int
    u: str
    v: str
    cartier_u: str
    cartier_v: str


class MonomialModel(ReportBase):
    command: str = "classify-monomial"
    p: int
    m_x: int
    m_y: int
    n_x: int
    n_y: int
    eps_x: int  # residue, 0 or p-1
    eps_y: int
    p_closed: bool
    proof_case: Optional[int] = None


class SeriesModel(ReportBase):
    command: str = "series-gen"
    p: int
    h: str
    c: str
    level: int
    f: str
    g: str
    divergence_free: bool
    c_f: str
    c_g: str
    obstruction: str
    threshold: int
    lowest_degree: Optional[int]
    vanishes_below_threshold: bool
    c_closed_form_ok: bool
    tail_identity_ok: bool
    failures: List[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report) -> "SeriesModel":
        return cls(
            p=report.spec.p,
            h=str(report.spec.h),
            c=str(report.spec.c),
            level=report.spec.level,
            f=str(report.f),
            g=str(report.g),
            divergence_free=report.divergence_free,
            c_f=str(report.c_f),
            c_g=str(report.c_g),
            obstruction=str(report.obstruction),
            threshold=report.threshold,
            lowest_degree=report.lowest_degree,
            vanishes_below_threshold=report.vanishes_below_threshold,
            c_closed_form_ok=report.c_closed_form_ok,
            tail_identity_ok=report.tail_identity_ok,
            failures=list(report.failures),
        )


class BenchTrial(BaseModel):
    trial: int
    fast_s: float
    brute_s: float
    fast_verdict: bool
    brute_verdict: bool
    agree: bool


class BenchModel(ReportBase):
    command: str = "bench"
    p: int
    deg: int
    trials: int
    agreements: int
    speedup: Optional[float] = Field(None, description="total brute time over total fast time")
    records: List[BenchTrial]


class SelftestCase(BaseModel):
    name: str
    ok: bool
    detail: str = ""


class SelftestModel(ReportBase):
    command: str = "selftest"
    passed: int
    failed: int
    cases: List[SelftestCase]


# Fixed document shape for ``check --json``.
CRITERION_JSON_SCHEMA = {
    "type": "object",
    "required": [
        "schema", "command", "p", "f", "g", "a", "c_f", "c_g", "obstruction", "p_closed", "witness_a",
    ],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "command": {"const": "check"},
        "p": {"type": "integer", "minimum": 2},
        "f": {"type": "string"},
        "g": {"type": "string"},
        "a": {"type": "string"},
        "c_f": {"type": "string"},
        "c_g": {"type": "string"},
        "c_f_root": {"type": "string"},
        "c_g_root": {"type": "string"},
        "obstruction": {"type": "string"},
        "p_closed": {"type": "boolean"},
        "witness_a": {"type": ["string", "null"]},
    },
}
