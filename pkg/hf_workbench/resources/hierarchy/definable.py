import logging
from typing import Optional

from hf_workbench.resources.formula.model import (
    And,
    Const,
    Eq,
    Falsum,
    Formula,
    Imp,
    In,
    Or,
    UExists,
    UForall,
    Var,
)
from hf_workbench.resources.formula.printer import to_text
from hf_workbench.resources.hfset.model import HFSet, is_transitive
from hf_workbench.resources.hierarchy.model import DefinableSubset
from hf_workbench.resources.hierarchy.schemas import (
    NOT_TRANSITIVE,
    TOO_MANY_SUBSETS,
    WITNESS_MISMATCH,
)
from hf_workbench.resources.oracle.evaluator import eval_formula
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.shared.errors import (
    BudgetExceeded,
    WitnessMismatch,
)
from hf_workbench.resources.shared.schemas import Budget
from hf_workbench.settings import get_settings

logger = logging.getLogger(__name__)

X, Y = Var('x'), Var('y')


def base_formulas(M: HFSet) -> list[Formula]:
    """Atoms in x with parameters from M, plus one-quantifier atoms."""
    formulas: list[Formula] = [Falsum(), Eq(X, X), In(X, X)]
    for p in M:
        c = Const(p)
        formulas.extend((In(X, c), In(c, X), Eq(X, c)))
    for quantifier in (UExists, UForall):
        formulas.extend(
            (quantifier('y', In(X, Y)), quantifier('y', In(Y, X)))
        )
    return formulas


def extension(phi: Formula, M: HFSet) -> HFSet:
    """{m ∈ M | ⟨M, ∈⟩ ⊨ φ(m)}."""
    return HFSet.of(
        m
        for m in M
        if eval_formula(phi, Env({'x': m}, universe_bound=M))
    )


class DefinableEnumerator:
    """
    Enumerates formulas φ(x) over ⟨M, ∈⟩ by rounds of &, | and ->,
    keeping one witness per extension. Extensions are tracked as bit
    masks over the canonical order of M.
    """

    def __init__(self, M: HFSet, budget: Optional[Budget] = None):
        self.M = M
        self.members = M.ordered()
        self.full = (1 << len(self.members)) - 1
        self.budget = budget or Budget.from_settings()
        self.witnesses: dict[int, Formula] = {}

    def mask(self, phi: Formula) -> int:
        subset = extension(phi, self.M)
        return sum(
            1 << i for i, m in enumerate(self.members) if m in subset
        )

    def subset(self, mask: int) -> HFSet:
        return HFSet.of(
            m for i, m in enumerate(self.members) if mask >> i & 1
        )

    def complete(self) -> bool:
        return len(self.witnesses) == self.full + 1

    def combine_round(self) -> bool:
        known = list(self.witnesses.items())
        if 3 * len(known) ** 2 > self.budget.ops:
            logger.warning('def enumeration stopped: %d masks', len(known))
            return False
        grown = False
        for a, phi in known:
            for b, psi in known:
                for mask, formula in (
                    (a & b, And(phi, psi)),
                    (a | b, Or(phi, psi)),
                    ((~a | b) & self.full, Imp(phi, psi)),
                ):
                    if mask not in self.witnesses:
                        self.witnesses[mask] = formula
                        grown = True
        return grown

    def run(self, depth: int) -> list[DefinableSubset]:
        for phi in base_formulas(self.M):
            self.witnesses.setdefault(self.mask(phi), phi)
        for _ in range(depth):
            if self.complete() or not self.combine_round():
                break
        found = []
        for mask, witness in sorted(self.witnesses.items()):
            subset = extension(witness, self.M)
            if subset is not self.subset(mask):
                raise WitnessMismatch(
                    f'{WITNESS_MISMATCH}: {to_text(witness)}'
                )
            found.append(DefinableSubset(subset=subset, witness=witness))
        return found


def definable_witnesses(
    M: HFSet, depth: Optional[int] = None, budget: Optional[Budget] = None
) -> list[DefinableSubset]:
    """
    Definable subsets of ⟨M, ∈⟩ with parameters from M, each paired with
    a formula whose oracle extension is that subset.

    :return: list of DefinableSubset.
    """
    settings = get_settings()
    if not is_transitive(M):
        raise ValueError(NOT_TRANSITIVE)
    if len(M) > settings.POWERSET_CAP:
        raise BudgetExceeded(f'{TOO_MANY_SUBSETS}: {len(M)} members')
    depth = settings.DEF_DEPTH if depth is None else depth
    return DefinableEnumerator(M, budget).run(depth)


def def_subsets(M: HFSet, depth: Optional[int] = None) -> HFSet:
    return HFSet.of(d.subset for d in definable_witnesses(M, depth))
