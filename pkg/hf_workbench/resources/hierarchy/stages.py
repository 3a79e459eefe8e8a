import functools
import logging
from typing import Optional

from hf_workbench.resources.compiler.compiler import compile_separation
from hf_workbench.resources.formula.catalog import (
    is_pair_formula,
    subset_formula,
)
from hf_workbench.resources.formula.model import (
    And,
    BExists,
    Formula,
    Var,
)
from hf_workbench.resources.hfset.model import (
    EMPTY,
    HFSet,
    as_natural,
    is_ordinal,
    numeral,
    pair,
    set_add,
    subsets,
    union_all,
)
from hf_workbench.resources.hierarchy.closure import HierarchyBuilder
from hf_workbench.resources.hierarchy.model import (
    AlphaStar,
    WitnessChain,
    WitnessStep,
)
from hf_workbench.resources.operations.enums import OpCode
from hf_workbench.resources.operations.evaluator import eval_term
from hf_workbench.resources.operations.model import App2, TermConst
from hf_workbench.resources.oracle.evaluator import eval_formula
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.shared.errors import StageTooLarge
from hf_workbench.settings import get_settings

logger = logging.getLogger(__name__)

ALPHA_STAR_VARS = ('gamma', 'g', 't')


def apply_step(
    code: OpCode, x: HFSet, y: HFSet, stages: dict[HFSet, int]
) -> WitnessStep:
    term = App2(code, TermConst(x), TermConst(y))
    value = eval_term(term, {})
    stage = max(stages[x], stages[y]) + 1
    stages.setdefault(value, stage)
    return WitnessStep(term=term, value=value, stage=stage)


def ll_membership_witness(n: int) -> WitnessChain:
    """
    Witness that n ∈ 𝕃_s without building any stage.

    An operation applied to members of 𝕃_β ∪ {𝕃_β} lands in 𝕃_{β+1};
    0 = 𝕃_0 is available at stage 0. After 1 = pair(0, 0), each
    increment is n + 1 = ⋃ pair(n, pair(n, n)). 𝓕_∪ is unary, so that is
    three applications and the chain certifies 3n - 2, above 2n + 1 from
    n = 4 on.

    :return: WitnessChain whose certified stage s satisfies n ∈ 𝕃_s.
    """
    if n == 0:
        return WitnessChain(n=0, steps=(), certified_stage=1)
    stages = {EMPTY: 0}
    steps = [apply_step(OpCode.PAIR, EMPTY, EMPTY, stages)]
    current = steps[-1].value
    for _ in range(n - 1):
        single = apply_step(OpCode.PAIR, current, current, stages)
        double = apply_step(OpCode.PAIR, current, single.value, stages)
        union = apply_step(OpCode.UNION, double.value, double.value, stages)
        steps.extend((single, double, union))
        current = union.value
    return WitnessChain(
        n=n, steps=tuple(steps), certified_stage=steps[-1].stage
    )


def verify_witness(chain: WitnessChain) -> bool:
    if chain.n == 0:
        return True
    for step in chain.steps:
        if eval_term(step.term, {}) is not step.value:
            return False
    return chain.steps[-1].value is numeral(chain.n)


@functools.lru_cache(maxsize=None)
def hered_add_minus(alpha: HFSet, gamma: HFSet) -> HFSet:
    """(α +_H γ)⁻ = ⋃{β +_H γ | β ∈ α} ∪ {α}."""
    below = HFSet.of(hered_add(beta, gamma) for beta in alpha.elements)
    return HFSet.of(union_all(below).elements | {alpha})


def hered_add(alpha: HFSet, gamma: HFSet) -> HFSet:
    """α +_H γ = (α +_H γ)⁻ + γ."""
    return set_add(hered_add_minus(alpha, gamma), gamma)


def alpha_star_formula() -> Formula:
    """
    𝒟(𝕃_γ) ⊆ 𝕃_α over a graph g = {<γ, 𝒟(𝕃_γ)>} and t = 𝕃_α:
    some p in g. some u in p. some d in u. p = <γ, d> & d ⊆ t.
    """
    gamma, graph, target = (Var(name) for name in ALPHA_STAR_VARS)
    p, u, d = Var('p'), Var('u'), Var('d')
    body = And(is_pair_formula(p, gamma, d), subset_formula(d, target))
    return BExists('p', graph, BExists('u', p, BExists('d', u, body)))


def alpha_star_k() -> int:
    phi = alpha_star_formula()
    return compile_separation(phi, 1, ALPHA_STAR_VARS).stage_bound


class AlphaStarSearch:
    """
    Computes C = {γ | 𝒟(𝕃_γ) ⊆ 𝕃_α}. C is downward closed under ∈
    (𝒟(𝕃_β) ⊆ 𝕃_γ ⊆ 𝒟(𝕃_γ) for β ∈ γ), so every member is a subset of
    C and a fixpoint over subsets of the current C finds all of them.
    """

    def __init__(self, alpha: HFSet, builder: HierarchyBuilder):
        self.alpha = alpha
        self.builder = builder
        self.target = builder.ll_level(alpha)
        self.closures: dict[HFSet, HFSet] = {}

    def condition(self, gamma: HFSet) -> bool:
        stage = self.builder.ll_level(gamma)
        # 𝕃_γ ∈ 𝒟(𝕃_γ) always
        if stage not in self.target or not stage <= self.target:
            return False
        closure = self.builder.d_closure(stage)
        self.closures[gamma] = closure
        return closure <= self.target

    def candidates(self) -> HFSet:
        found: set[HFSet] = set()
        tested: set[HFSet] = set()
        changed = True
        while changed:
            changed = False
            for gamma in subsets(HFSet.of(found)):
                if gamma in tested:
                    continue
                tested.add(gamma)
                if self.condition(gamma):
                    found.add(gamma)
                    changed = True
        return HFSet.of(found)


def in_stage(
    x: HFSet, delta: HFSet, builder: HierarchyBuilder
) -> Optional[bool]:
    """
    x ∈ 𝕃_δ for an ordinal δ, decided through smaller enumerable stages
    (𝕃 is ⊆-monotone) or a numeral witness chain; None when neither
    applies.
    """
    limit = get_settings().LL_ENUM_LIMIT
    depth = as_natural(delta)
    for m in range(min(depth, limit) + 1):
        try:
            if x in builder.ll_level(numeral(m)):
                return True
        except StageTooLarge:
            break
    n = as_natural(x)
    if n is not None:
        if ll_membership_witness(n).certified_stage <= depth:
            return True
    return None


def alpha_star(
    alpha: HFSet,
    builder: Optional[HierarchyBuilder] = None,
    k: Optional[int] = None,
) -> AlphaStar:
    """
    α* = {γ ∈ 𝕃_{(α +_H k)⁻} | 𝒟(𝕃_γ) ⊆ 𝕃_α}, with k the stage bound of
    the defining formula.

    :return: AlphaStar with the candidate set, the members, and checks.
    """
    builder = builder or HierarchyBuilder()
    k = alpha_star_k() if k is None else k
    domain = hered_add_minus(alpha, numeral(k))
    search = AlphaStarSearch(alpha, builder)
    candidates = search.candidates()
    members, undecided = [], []
    for gamma in candidates:
        decided = in_stage(gamma, domain, builder)
        if decided:
            members.append(gamma)
        elif decided is None:
            undecided.append(gamma)
    star = HFSet.of(members)
    graph = HFSet.of(
        pair(gamma, closure) for gamma, closure in search.closures.items()
    )
    phi = alpha_star_formula()
    agrees = all(
        eval_formula(
            phi,
            Env({'gamma': gamma, 'g': graph, 't': search.target}),
        )
        == (gamma in candidates)
        for gamma in search.closures
    )
    logger.info(
        'alpha* for %d: %d candidates, k=%d',
        as_natural(alpha) or 0,
        len(candidates),
        k,
    )
    return AlphaStar(
        alpha=alpha,
        k=k,
        domain_stage=domain,
        candidates=candidates,
        members=star,
        non_ordinals=tuple(g for g in star if not is_ordinal(g)),
        undecided=tuple(undecided),
        stage_equal=builder.ll_level(star) is search.target,
        formula_agrees=agrees,
    )
