from typing import Optional

from pydantic import BaseModel, Field

from hf_workbench.resources.realizability.enums import (
    UnknownReason,
    Variant,
    VerdictKind,
)

# Centralized error messages
TERM_UNDEFINED = 'Realizer term has no value'
AUDIT_NEEDS_BOUNDED = 'Truth audit needs bounded formulas'

# Quantifiers over all sets are searched, not decided
SURROGATE = 'bounded-search'


class CheckIn(BaseModel):
    realizer: str
    formula: str
    env: dict[str, str] = {}
    variant: Variant = Variant.WT
    fuel: Optional[int] = Field(default=None, gt=0)
    search_rank: Optional[int] = Field(default=None, ge=0, le=3)
    closed_world: bool = False


class VerdictOut(BaseModel):
    kind: VerdictKind
    reason: Optional[UnknownReason] = None
    variant: Variant
    search_relative: bool = False
    interpretation: str = SURROGATE


class AuditEntry(BaseModel):
    realizer: str
    formula: str
    env: dict[str, str] = {}
    verdict: VerdictKind
    truth: bool


class AuditOut(BaseModel):
    ok: bool
    violations: list[str]
    entries: list[AuditEntry]
