from pydantic import BaseModel, Field

# Centralized error messages
NOT_SIGMA0 = 'Only Σ₀ formulas (∈-bounded quantifiers) can be compiled'
NO_VARIABLES = 'At least one variable is required'
DUPLICATE_VARIABLE = 'Variable list contains a duplicate'
POSITION_OUT_OF_RANGE = 'Separation position is outside the variable list'


class CompileIn(BaseModel):
    text: str
    vars: list[str] = Field(min_length=1)


class SeparationIn(CompileIn):
    position: int = Field(ge=1)


class CompilationOut(BaseModel):
    term: str
    var_order: list[str]
    parameter: str | None = None
    stage_bound: int
    depth: int
    size: int


class StageBoundIn(BaseModel):
    text: str


class StageBoundOut(BaseModel):
    text: str
    stage_bound: int
