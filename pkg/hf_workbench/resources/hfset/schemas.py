from typing import Optional

from pydantic import BaseModel, field_validator

from hf_workbench.resources.hfset.enums import PairSide, SetAlgebraKind

# Centralized error messages
NOT_A_PAIR = 'Set is not an ordered pair'
EMPTY_TUPLE = 'Cannot build a tuple from an empty list'
POWERSET_TOO_LARGE = 'Powerset base exceeds the configured cap'
SECOND_ARGUMENT_REQUIRED = 'This set operation needs a second argument'
UNEXPECTED_END = 'Unexpected end of literal'
UNEXPECTED_CHAR = 'Unexpected character'
TRAILING_INPUT = 'Trailing input after literal'


class SetLiteralIn(BaseModel):
    literal: str

    @field_validator('literal')
    def literal_must_not_be_empty(cls, v):
        if not v.strip():
            raise ValueError('Literal must not be empty')
        return v


class SetOut(BaseModel):
    literal: str
    rank: int
    size: int
    is_ordinal: bool
    natural: Optional[int] = None


class SetAlgebraIn(BaseModel):
    kind: SetAlgebraKind
    x: str
    y: Optional[str] = None


class ProjectIn(BaseModel):
    literal: str
    side: PairSide
