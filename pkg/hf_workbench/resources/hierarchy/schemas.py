from typing import Optional

from pydantic import BaseModel, Field

# Centralized error messages
NOT_AN_ORDINAL = 'Stage index must be a von Neumann ordinal'
STAGE_TOO_LARGE = 'Stage exceeds the configured budget'
OPS_TOO_MANY = 'Closure step needs more operation applications than allowed'
NOT_TRANSITIVE = 'Set must be transitive'
TOO_MANY_SUBSETS = 'Too many candidate subsets to enumerate'
WITNESS_MISMATCH = 'Witness formula disagrees with its extension'


class StageIn(BaseModel):
    alpha: int = Field(ge=0)
    with_aux: bool = False


class StageOut(BaseModel):
    alpha: str
    size: int
    members: Optional[list[str]] = None
    ops_applied: int
    elapsed: float


class ClosureIn(BaseModel):
    literal: str
    steps: int = Field(ge=0)


class ClosureOut(BaseModel):
    steps: int
    sizes: list[int]
    definable_subsets: list[str]


class WitnessOut(BaseModel):
    n: int
    steps: list[str]
    certified_stage: int
    target_stage: int
    meets_target: bool


class AlphaStarOut(BaseModel):
    alpha: int
    k: int
    domain_stage: int
    candidates: list[str]
    members: list[str]
    non_ordinals: list[str]
    undecided: list[str]
    stage_equal: bool
    formula_agrees: bool


class DefinableOut(BaseModel):
    subset: str
    witness: str
