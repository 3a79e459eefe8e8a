from typing import Any, Optional

from pydantic import BaseModel, Field

from hf_workbench.settings import Settings, get_settings

# Centralized error messages
BUDGET_EXCEEDED = 'Budget exceeded'
USAGE_ERROR = 'Invalid usage'


class Budget(BaseModel):
    """Per-invocation resource limits, defaulted from settings."""

    elems: int
    ops: int
    depth: int
    fuel: int
    seed: int
    search_rank: int

    @classmethod
    def from_settings(
        cls, settings: Optional[Settings] = None, **overrides
    ) -> 'Budget':
        settings = settings or get_settings()
        values = {
            'elems': settings.BUDGET_ELEMS,
            'ops': settings.BUDGET_OPS,
            'depth': settings.BUDGET_DEPTH,
            'fuel': settings.FUEL,
            'seed': settings.SEED,
            'search_rank': settings.SEARCH_RANK,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class Versions(BaseModel):
    index_table: str
    grammar: str
    package: str


class RunReport(BaseModel):
    command: list[str]
    inputs_digest: str
    results: Any = None
    budgets: Budget
    violations: list[str] = Field(default_factory=list)
    versions: Versions
    seed: int
    timestamp: str


class Report(BaseModel):
    """Result of a property check: what was tested and what failed."""

    name: str
    checked: int = 0
    violations: list[str] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, passed: bool, message: str) -> None:
        self.checked += 1
        if not passed:
            self.violations.append(message)

    def merge(self, other: 'Report') -> 'Report':
        self.checked += other.checked
        self.violations.extend(
            f'{other.name}: {message}' for message in other.violations
        )
        return self
