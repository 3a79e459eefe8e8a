from pydantic import BaseModel, Field

# Centralized error messages
UNBOUNDED_WITHOUT_UNIVERSE = (
    'Unbounded quantifier needs a universe bound for brute-force evaluation'
)
VARS_ARGS_MISMATCH = 'Variable list and argument list differ in length'
NO_VARIABLES = 'At least one variable is required'
NOT_BOUNDED = 'Comprehension needs a bounded formula'


class EvalFormulaIn(BaseModel):
    text: str
    env: dict[str, str] = Field(default_factory=dict)
    universe: str | None = None


class TruthOut(BaseModel):
    text: str
    value: bool


class ComprehensionIn(BaseModel):
    text: str
    vars: list[str]
    args: list[str]


class ComprehensionOut(BaseModel):
    literal: str
    size: int
