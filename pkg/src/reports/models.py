"""Pydantic models for command results."""

from datetime import datetime
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

SCHEMA_VERSION = 1


class VersionedModel(BaseModel):
    """Base for top-level records; serialized with a ``schema`` key."""
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias='schema')

    def to_json_dict(self, exclude: Optional[set] = None) -> Dict[str, Any]:
        return self.model_dump(by_alias=True, exclude=exclude, mode='json')


# Polynomial results
class PolyResult(VersionedModel):
    """A computed polynomial with its inputs."""
    kind: str
    inputs: Dict[str, str]
    polynomial: str
    terms: List[Dict[str, Any]]
    value_at_ones: Optional[int] = None
    principal: Optional[str] = None
    reduced_word: Optional[str] = None


# Verification
class Counterexample(BaseModel):
    """The first failing case of a sweep, both sides rendered."""
    case: Dict[str, str]
    left_label: str
    left: str
    right_label: str
    right: str


class VerificationReport(VersionedModel):
    """Outcome of one identity sweep."""
    identity: str
    params: Dict[str, Any] = Field(default_factory=dict)
    cases: int = 0
    skipped: int = 0
    passed: bool = True
    elapsed_ms: Optional[int] = None
    counterexample: Optional[Counterexample] = None
    details: List[str] = Field(default_factory=list)


# Search
class SearchReport(VersionedModel):
    """Maximum of the Schubert value at all-ones over S_n."""
    n: int
    max_value: int
    argmax: List[str]
    all_argmax_richardson: bool
    runtime_ms: Optional[int] = None
    threads: int = 1
    values: Optional[Dict[str, int]] = None
    discrepancies: List[str] = Field(default_factory=list)

    @field_validator('argmax')
    @classmethod
    def argmax_not_empty(cls, value: List[str]) -> List[str]:
        if not value:
            raise ValueError("argmax must contain at least one permutation")
        return value


# Catalan tables
class CatalanRow(BaseModel):
    """Catalan data for one n."""
    n: int
    catalan: int
    q_catalan: str
    hankel: Dict[int, int]


class CatalanReport(VersionedModel):
    rows: List[CatalanRow]
    h_max: int


# History
class RunRecord(BaseModel):
    """A stored run, as listed by ``history``."""
    id: int
    kind: str
    label: str
    passed: bool
    summary: str
    runtime_ms: Optional[int] = None
    created_at: Optional[datetime] = None
    
    model_config = {"from_attributes": True}
