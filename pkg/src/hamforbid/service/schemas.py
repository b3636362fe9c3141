"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator


class RationalPair(BaseModel):
    num: int
    den: int = Field(ge=1)


RationalJSON = Union[Literal["inf"], RationalPair]


class InvariantsRequest(BaseModel):
    graph6: str
    k: int = Field(ge=1, default=2)
    max_n: Optional[int] = None


class InvariantsResponse(BaseModel):
    n: int
    kappa: int
    toughness: RationalJSON
    alpha_e: int
    mu: dict[str, RationalJSON]
    freeness: dict[str, bool]


class EncodeRequest(BaseModel):
    n: int = Field(ge=1, le=62)
    edges: list[tuple[int, int]] = Field(default_factory=list)


class EncodeResponse(BaseModel):
    graph6: str


class DecodeRequest(BaseModel):
    graph6: str


class DecodeResponse(BaseModel):
    n: int
    edges: list[tuple[int, int]]
    degrees: list[int]


class HypothesisSpec(BaseModel):
    name: str
    k: int = Field(ge=1)


class CorpusSpec(BaseModel):
    exhaustive_n: Optional[int] = Field(default=None, ge=1, le=7)
    graph6_lines: Optional[list[str]] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "CorpusSpec":
        if (self.exhaustive_n is None) == (self.graph6_lines is None):
            raise ValueError("provide exactly one of exhaustive_n or graph6_lines")
        return self


class VerifyRequest(BaseModel):
    hypothesis: HypothesisSpec
    corpus: CorpusSpec
    jobs: Optional[int] = Field(default=None, ge=1)
    seed: int = 0


class VerifyResponse(BaseModel):
    hypothesis: dict
    corpus_size: int
    filtered: int
    hamiltonian_count: int
    exceptions: list[str]
    counterexamples: list[str]
    per_condition_rejects: dict[str, int]
    runtime_ms: int
    seed: int
    aborted: bool
    diagnostics: list[str] = Field(default_factory=list)


class ReplayRequest(BaseModel):
    graph6: str
    k: int = Field(ge=2)


class ReplayResponse(BaseModel):
    kind: str
    trace: list[dict]
    certificate: Optional[dict] = None
    longer_cycle: Optional[dict] = None


class LemmaSectionJSON(BaseModel):
    valid_trials: int
    passes: int
    vacuous: bool


class LemmasRequest(BaseModel):
    trials: int = Field(ge=1)
    seed: int = 0


class LemmasResponse(BaseModel):
    trials: int
    seed: int
    independent_union: LemmaSectionJSON
    neighbor_count: LemmaSectionJSON
    exterior_structure: LemmaSectionJSON
    all_pass: bool


class ErrorResponse(BaseModel):
    error: str
    detail: str
