from pydantic import BaseModel, field_validator

from hf_workbench.resources.formula.enums import Classification

# Centralized error messages
UNEXPECTED_TOKEN = 'Unexpected token'
UNEXPECTED_END = 'Unexpected end of formula'
EXPECTED_TERM = 'Expected a variable or HF literal'
EXPECTED_RELATION = "Expected 'in' or '='"
EXPECTED_BOUND_KIND = "Expected 'in' or 'sub'"
EXPECTED_DOT = "Expected '.' after the quantifier prefix"
EXPECTED_VARIABLE = 'Expected a variable name'
UNCLOSED_PAREN = "Expected ')'"
INVALID_LITERAL = 'Invalid HF literal'
EMPTY_FORMULA = 'Formula must not be empty'


class FormulaIn(BaseModel):
    text: str

    @field_validator('text')
    def text_must_not_be_empty(cls, v):
        if not v.strip():
            raise ValueError(EMPTY_FORMULA)
        return v


class FormulaOut(BaseModel):
    text: str
    classification: Classification
    free_vars: list[str]
    depth: int


class RelativizeIn(BaseModel):
    text: str
    bound: str
