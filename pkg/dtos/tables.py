"""Row models of the emitted CSV tables. Exact rationals are strings "p/q"."""
from pydantic import BaseModel, ConfigDict, Field


class ClassRow(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    symmetry_class: str = Field(..., alias="class", examples=["full"])


class CountRow(ClassRow):
    m: int = Field(..., description="Half-perimeter.")
    n: int = Field(..., description="Area.")
    count: int


class ExactSeriesRow(ClassRow):
    m: int
    n: int
    coefficient: int


class JetSeriesRow(ClassRow):
    m: int
    k: int = Field(..., description="Power of delta = q - 1.")
    jet_coefficient: str = Field(..., examples=["16/5"])


class FactorialMomentRow(ClassRow):
    m: int
    k: int
    factorial_moment: str
    power_moment: str


class LawMomentRow(BaseModel):
    law: str = Field(..., examples=["airy"])
    k: int
    exact: str = Field(..., examples=["1·√π"])
    decimal: str
    digits: int


class ClassLimitRow(ClassRow):
    k: int
    exact: str
    decimal: str
    digits: int


class SequenceRow(BaseModel):
    k: int
    phi: str
    omega: str
    f: str
    g: str
    g_decimal: str
    digits: int


class OrbitRow(BaseModel):
    subgroup: str = Field(..., examples=["d4"])
    m: int
    n: int
    orbit_count: str = Field(..., description="Orbit count, or the rational Burnside weight for subgroups "
                                              "that do not act on staircase polygons.", examples=["3", "5/2"])


class OrbitJetRow(BaseModel):
    subgroup: str
    m: int
    k: int
    jet_coefficient: str


class RatioRow(BaseModel):
    subgroup: str
    alpha: str
    m: int
    ratio_num: int
    ratio_den: int
    ratio_decimal: str
    digits: int


class MomentReportRow(ClassRow):
    k: int
    m: int
    factorial_moment: str
    power_moment: str
    normalized: str
    limit: str
    rel_dev: str
    digits: int
    normalized_exact: str
    limit_exact: str


class ExtrapolationRow(ClassRow):
    k: int
    estimate: str
    limit: str
    rel_dev: str
    digits: int
    model: str = Field(..., examples=["a+b*m^(-1/2)"])
    heuristic: bool = True


class CheckRow(BaseModel):
    check: str
    status: str = Field(..., examples=["pass", "fail"])
    detail: str
