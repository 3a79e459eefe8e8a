from typing import Optional

from pydantic import BaseModel

from hf_workbench.resources.operations.enums import OpCode

# Centralized error messages
ARITY_MISMATCH = 'Operation applied to the wrong number of arguments'
BAD_TERM_FORM = 'Malformed operation term'
UNKNOWN_OPCODE = 'Unknown operation code'


class FundamentalIn(BaseModel):
    code: OpCode
    x: str
    y: str
    z: Optional[str] = None


class EvalTermIn(BaseModel):
    term: str
    env: dict[str, str] = {}


class ValueOut(BaseModel):
    literal: str


class TermOut(BaseModel):
    term: str
    depth: int
    size: int
