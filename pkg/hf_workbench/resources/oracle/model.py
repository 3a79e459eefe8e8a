from dataclasses import dataclass, field
from typing import Mapping, Optional

from hf_workbench.resources.hfset.model import HFSet


@dataclass(frozen=True)
class Env:
    """Variable assignment plus the range used for unbounded quantifiers."""

    assignment: Mapping[str, HFSet] = field(default_factory=dict)
    universe_bound: Optional[HFSet] = None

    def bind(self, name: str, value: HFSet) -> 'Env':
        return Env({**self.assignment, name: value}, self.universe_bound)

    def __contains__(self, name: str) -> bool:
        return name in self.assignment

    def __getitem__(self, name: str) -> HFSet:
        return self.assignment[name]
