from pydantic import BaseModel, Field

from hf_workbench.resources.erecursion.enums import Index, OutcomeKind

# Centralized error messages
BAD_WTERM_FORM = 'Malformed application term'
UNKNOWN_INDEX = 'Unknown index'
FREE_VARIABLE = 'Application term is not closed'
NOT_APPLICABLE = 'Set is neither an index nor an application state'
TOO_MANY_ARGUMENTS = 'Index applied to too many arguments'
NOT_A_NUMERAL = 'Argument is not a natural number'
NOT_A_PAIR = 'Argument is not an ordered pair'
POWERSET_MODE = 'Powerset index requires powerset mode'
FUEL_REQUIRED = 'Fuel must be positive'


class IndexOut(BaseModel):
    name: Index
    number: int
    arity: int


class IndexTableOut(BaseModel):
    version: str
    indices: list[IndexOut]


class ApplyIn(BaseModel):
    e: str
    args: list[str] = Field(min_length=1)
    fuel: int | None = Field(default=None, gt=0)
    pmode: bool = False


class RunIn(BaseModel):
    term: str
    env: dict[str, str] = {}
    fuel: int | None = Field(default=None, gt=0)
    pmode: bool = False


class OutcomeOut(BaseModel):
    kind: OutcomeKind
    value: str | None = None
    spent: int | None = None
    detail: str | None = None
