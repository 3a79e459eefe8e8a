from dataclasses import dataclass, field

from hf_workbench.resources.formula.model import Formula
from hf_workbench.resources.hfset.model import (
    HFSet,
    as_natural,
    is_ordinal,
    numeral,
)
from hf_workbench.resources.hierarchy.schemas import NOT_AN_ORDINAL
from hf_workbench.resources.operations.model import OpTerm


@dataclass(frozen=True)
class StageIndex:
    """A von Neumann ordinal used to index 𝕃 stages."""

    alpha: HFSet

    def __post_init__(self):
        if not is_ordinal(self.alpha):
            raise ValueError(NOT_AN_ORDINAL)

    @classmethod
    def of(cls, n: int) -> 'StageIndex':
        return cls(numeral(n))

    @property
    def value(self) -> int:
        return as_natural(self.alpha)


@dataclass
class StageStats:
    sizes: dict[str, int] = field(default_factory=dict)
    ops_applied: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class WitnessStep:
    """One operation application in a membership witness chain."""

    term: OpTerm
    value: HFSet
    stage: int


@dataclass(frozen=True)
class WitnessChain:
    n: int
    steps: tuple[WitnessStep, ...]
    certified_stage: int

    @property
    def target_stage(self) -> int:
        return 2 * self.n + 1

    @property
    def meets_target(self) -> bool:
        return self.certified_stage <= self.target_stage


@dataclass(frozen=True)
class AlphaStar:
    alpha: HFSet
    k: int
    domain_stage: HFSet
    candidates: HFSet
    members: HFSet
    non_ordinals: tuple[HFSet, ...]
    undecided: tuple[HFSet, ...]
    stage_equal: bool
    formula_agrees: bool


@dataclass(frozen=True)
class DefinableSubset:
    subset: HFSet
    witness: Formula
