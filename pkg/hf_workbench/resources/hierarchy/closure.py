import logging
import time
from typing import Optional

from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import HFSet, successor
from hf_workbench.resources.hierarchy.model import StageStats
from hf_workbench.resources.hierarchy.repository import (
    StageRepository,
    get_stage_repository,
)
from hf_workbench.resources.hierarchy.schemas import (
    OPS_TOO_MANY,
    STAGE_TOO_LARGE,
)
from hf_workbench.resources.operations.enums import AUXILIARY, FUNDAMENTAL
from hf_workbench.resources.operations.evaluator import (
    eval_aux_g,
    eval_fund,
)
from hf_workbench.resources.shared.errors import StageTooLarge
from hf_workbench.resources.shared.schemas import Budget

logger = logging.getLogger(__name__)


def closure_cost(size: int, with_aux: bool = False) -> int:
    """Operation applications needed for one 𝒟ᵉ step on `size` members."""
    cost = len(FUNDAMENTAL) * size * size
    if with_aux:
        cost += len(AUXILIARY) * size**3
    return cost


class HierarchyBuilder:
    """
    Budgeted builders for 𝒟ᵉ, 𝒟, truncated Def and the 𝕃 stages.

    Results are memoized in a StageRepository shared across builders, so
    a stage computed once is never rebuilt in the same process.
    """

    def __init__(
        self,
        budget: Optional[Budget] = None,
        repository: Optional[StageRepository] = None,
    ):
        self.budget = budget or Budget.from_settings()
        self.repository = repository or get_stage_repository()
        self.stats = StageStats()

    def check_ops(self, size: int, with_aux: bool) -> None:
        if closure_cost(size, with_aux) > self.budget.ops:
            raise StageTooLarge(f'{OPS_TOO_MANY}: {size} members')

    def check_size(self, produced: set[HFSet]) -> None:
        if len(produced) > self.budget.elems:
            raise StageTooLarge(
                f'{STAGE_TOO_LARGE}: {len(produced)} elements',
                partial=HFSet.of(produced),
            )

    def d_small(self, b: HFSet, with_aux: bool = False) -> HFSet:
        """
        𝒟ᵉ(b) = b ∪ {𝓕ᵢ(x, y) | x, y ∈ b}; with `with_aux` the 𝓖
        operations on all triples from b are added too.

        :return: HFSet.
        """
        members = b.ordered()
        self.check_ops(len(members), with_aux)
        produced = set(b.elements)
        for x in members:
            for y in members:
                for code in FUNDAMENTAL:
                    produced.add(eval_fund(code, x, y))
                self.stats.ops_applied += len(FUNDAMENTAL)
                if with_aux:
                    for z in members:
                        for code in AUXILIARY:
                            produced.add(eval_aux_g(code, x, y, z))
                    self.stats.ops_applied += len(AUXILIARY) * len(members)
            self.check_size(produced)
        return HFSet.of(produced)

    def d_closure(self, b: HFSet, with_aux: bool = False) -> HFSet:
        """𝒟(b) = 𝒟ᵉ(b ∪ {b})."""
        found = self.repository.get_closure(b, with_aux)
        if found is not None:
            return found
        value = self.d_small(successor(b), with_aux)
        return self.repository.put_closure(b, with_aux, value)

    def def_truncated(self, b: HFSet, steps: int) -> list[HFSet]:
        """
        The truncations 𝒟⁰(b), 𝒟¹(b), ..., 𝒟^steps(b) of Def(b). The
        sequence is increasing, so the last entry is ⋃_{n ≤ steps} 𝒟ⁿ(b).
        """
        levels = [b]
        for _ in range(steps):
            try:
                levels.append(self.d_closure(levels[-1]))
            except StageTooLarge as error:
                logger.warning(
                    'Def truncation stopped after %d steps',
                    len(levels) - 1,
                )
                raise StageTooLarge(error.message, partial=levels)
        return levels

    def ll_level(self, alpha: HFSet, with_aux: bool = False) -> HFSet:
        """
        𝕃_α = ⋃_{β ∈ α} 𝒟(𝕃_β), for any HF index α.

        :return: HFSet.
        """
        found = self.repository.get_stage(alpha, with_aux)
        if found is not None:
            self.stats.sizes[to_literal(alpha)] = len(found)
            return found
        parts: set[HFSet] = set()
        for beta in alpha.ordered():
            parts |= self.d_closure(
                self.ll_level(beta, with_aux), with_aux
            ).elements
            self.check_size(parts)
        stage = HFSet.of(parts)
        self.stats.sizes[to_literal(alpha)] = len(stage)
        logger.info(
            'stage %s built with %d elements', to_literal(alpha), len(stage)
        )
        return self.repository.put_stage(alpha, with_aux, stage)

    def timed_level(self, alpha: HFSet, with_aux: bool = False) -> HFSet:
        started = time.perf_counter()
        try:
            return self.ll_level(alpha, with_aux)
        finally:
            self.stats.elapsed += time.perf_counter() - started
