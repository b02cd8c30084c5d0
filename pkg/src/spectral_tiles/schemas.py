"""Pydantic request/response models: the wire format of service and CLI.

Conventions: integer sets ride as {"set": [0, 1, 4, 5]}, spectra as
{"spectrum": ["0", "1/8", "1/2", "5/8"]} with rationals in "p/q" form,
matrices as {"n": N, "entries": [[re, im], ...]} row-major (exact ones
additionally carry "order" and "scale"), and tiling certificates as
{"A": [...], "T": [...], "d": d, "verified": true}.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class _Base(BaseModel):
    model_config = ConfigDict(populate_by_name=True)


# ---------------------------------------------------------------- requests


class VerifyRequest(_Base):
    set_: list[int] = Field(alias="set")
    spectrum: list[str | float | int]
    mode: Literal["exact", "float"] = "exact"
    tol: float | None = Field(default=None, gt=0)


class SearchRequest(_Base):
    set_: list[int] = Field(alias="set")
    max_denominator: int = Field(ge=1)
    jobs: int = Field(default=1, ge=1)  # parallelism hint; output is sorted either way


class PairRequest(_Base):
    set_: list[int] = Field(alias="set")
    spectrum: list[str]


class GroupRequest(_Base):
    set_: list[int] = Field(alias="set")
    spectrum: list[str]
    t: str | float | int


class ComplementsRequest(_Base):
    set_: list[int] = Field(alias="set")
    spectrum: list[str]
    all_translates: bool = False
    jobs: int = Field(default=1, ge=1)


class PeriodRequest(_Base):
    set_: list[int] = Field(alias="set")
    spectrum: list[str]
    d: int = Field(ge=1)


class ClassifyRequest(_Base):
    set_: list[int] = Field(alias="set")


class MatchN4Request(_Base):
    set_: list[int] = Field(alias="set")
    l: list[int]
    r: int = Field(ge=1)


class FugledeRequest(_Base):
    n: int = Field(ge=1, le=30)
    max_size: int | None = Field(default=None, ge=1)
    jobs: int = Field(default=1, ge=1)


class IndicatorSpec(_Base):
    branch: int
    start: str | int = "0"
    end: str | int = "1"


class TranslateRequest(_Base):
    set_: list[int] = Field(alias="set")
    spectrum: list[str]
    t: str | float | int
    resolution: int = Field(default=256, ge=1)
    indicator: IndicatorSpec | None = None
    values: list[list[tuple[float, float]]] | None = None

    @model_validator(mode="after")
    def _exactly_one_function(self):
        if (self.indicator is None) == (self.values is None):
            raise ValueError("provide exactly one of 'indicator' or 'values'")
        return self


class TrajectoryRequest(_Base):
    set_: list[int] = Field(alias="set")
    spectrum: list[str]
    t_start: str | float | int = 0
    t_end: str | float | int = 0
    steps: int = Field(default=1, ge=1)
    resolution: int = Field(default=256, ge=1)
    indicator: IndicatorSpec | None = None
    values: list[list[tuple[float, float]]] | None = None
    output: Literal["json", "csv"] = "json"

    @model_validator(mode="after")
    def _exactly_one_function(self):
        if (self.indicator is None) == (self.values is None):
            raise ValueError("provide exactly one of 'indicator' or 'values'")
        return self


# ---------------------------------------------------------------- responses


class SpectrumModel(_Base):
    spectrum: list[str]


class VerifyResponse(_Base):
    spectral: bool
    mode: str
    certified: bool
    witness: list[str] | None = None


class SearchResponse(_Base):
    spectra: list[SpectrumModel]


class MatrixResponse(_Base):
    n: int
    entries: list[tuple[float, float]]
    order: int | None = None
    scale: str | None = None


class LatticeModel(_Base):
    r: int
    d: int


class ThetaResponse(_Base):
    modulus: int
    residues: list[int]
    lattice: LatticeModel


class TilingCertificateModel(_Base):
    a: list[int] = Field(alias="A")
    t: list[int] = Field(alias="T")
    d: int
    verified: bool


class ComplementsResponse(_Base):
    d: int
    certificates: list[TilingCertificateModel]


class PeriodResponse(_Base):
    periodic: bool
    d: int


class ClassifyResponse(_Base):
    spectral: bool
    witness: list[str] | None
    power: int
    reduced_set: list[int]
    sweep_bound: int


class N4ParamsModel(_Base):
    set_shift: int
    freq_shift: int
    gap: int
    set_odds: tuple[int, int, int]
    freq_odds: tuple[int, int, int]
    extra: int
    scaling_factor: int


class MatchN4Response(_Base):
    match: bool
    params: N4ParamsModel | None = None


class FugledeRecordModel(_Base):
    a: list[int] = Field(alias="A")
    tiles: bool
    complement: list[int] | None
    spectral: bool
    spectrum: list[str] | None


class FugledeResponse(_Base):
    n: int
    max_size: int
    records: list[FugledeRecordModel]
    discrepancies: list[FugledeRecordModel]


class SampledFunctionModel(_Base):
    set_: list[int] = Field(alias="set")
    resolution: int
    values: list[list[tuple[float, float]]]
    norm_squared: float


class TrajectoryRowModel(_Base):
    t: float
    branch: int
    x: float
    re: float
    im: float
    abs_: float = Field(alias="abs")


class TrajectoryFrameModel(_Base):
    t: float
    norm_squared: float


class TrajectoryResponse(_Base):
    frames: list[TrajectoryFrameModel]
    rows: list[TrajectoryRowModel]


class ErrorModel(_Base):
    error: str
    detail: str
