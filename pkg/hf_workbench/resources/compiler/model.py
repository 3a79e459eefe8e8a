from dataclasses import dataclass
from typing import Optional

from hf_workbench.resources.operations.model import OpTerm


@dataclass(frozen=True)
class CompilationResult:
    """
    A compiled term with the variable order it expects.

    For separation terms `parameter` names the variable holding the set
    being separated; the separated variable itself is absent from the
    term.
    """

    term: OpTerm
    var_order: tuple[str, ...]
    stage_bound: int
    parameter: Optional[str] = None
