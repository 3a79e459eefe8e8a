from typing import Any

from pydantic import BaseModel, Field

from hf_workbench.resources.shared.schemas import Report

# Centralized error messages
OUTSIDE_CONE = 'Node lies outside the cone of the name'
DIFFERENT_BASE = 'Names must share their base node'
NO_ROOT = 'Frame has no unique root'
TOO_MANY_NAMES = 'Name universe exceeds the configured budget'
INVALID_BITS = 'Bits must be a string of 0 and 1'


class FrameFile(BaseModel):
    """A frame given by generating edges; reflexive-transitive closure is
    taken on load."""

    nodes: list[str]
    edges: list[tuple[str, str]] = Field(default_factory=list)


class BuildIn(BaseModel):
    frame: FrameFile
    cutoff: int = Field(ge=0, le=4)


class BuildOut(BaseModel):
    cutoff: int
    counts: dict[str, int]


class DeltaIn(BaseModel):
    bits: str = Field(pattern=r'^[01]*$')
    alpha_node: str = '1'


class DeltaOut(BaseModel):
    bits: str
    decoded: str
    name: dict[str, Any]


class CheckOut(BaseModel):
    ok: bool
    report: Report
