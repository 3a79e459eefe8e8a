from pydantic import BaseModel, Field

from hf_workbench.resources.shared.schemas import Report

# Centralized error messages
INVALID_MODEL = 'Kripke model violates its validity conditions'
UNKNOWN_NODE = 'Node is not part of the frame'
UNKNOWN_ELEMENT = 'Element is not in the domain of the node'
UNKNOWN_CONSTANT = 'Constant does not name an element of the node'
MISSING_TRANSITION = 'No transition map for an accessible pair of nodes'
NOT_REFLEXIVE = 'Accessibility relation is not reflexive'
NOT_TRANSITIVE = 'Accessibility relation is not transitive'
# Reported alongside NOT_TRANSITIVE.
PREORDER_REQUIRED = (
    'Transitivity is enforced in addition to reflexivity so that the '
    'composition law on transition maps is well defined'
)


class TransitionFile(BaseModel):
    source: str
    target: str
    map: dict[str, str]


class KripkeModelFile(BaseModel):
    """On-disk and over-the-wire form of a Kripke model."""

    nodes: list[str]
    edges: list[tuple[str, str]]
    domains: dict[str, list[str]]
    eq_classes: dict[str, list[list[str]]] = Field(default_factory=dict)
    membership: dict[str, list[tuple[str, str]]] = Field(
        default_factory=dict
    )
    transitions: list[TransitionFile] = Field(default_factory=list)


class ForcesIn(BaseModel):
    model: KripkeModelFile
    node: str
    text: str
    assignment: dict[str, str] = Field(default_factory=dict)


class ForcesOut(BaseModel):
    node: str
    text: str
    forced: bool


class ValidIn(BaseModel):
    model: KripkeModelFile
    text: str


class ValidOut(BaseModel):
    text: str
    valid: bool
    failing_nodes: list[str]


class ValidateOut(BaseModel):
    valid: bool
    report: Report
