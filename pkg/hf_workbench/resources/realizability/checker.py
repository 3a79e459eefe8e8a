"""
Realizability with truth and its two relatives, decided at a budget.

Realizers for disjunctions and existentials are families of tagged
pairs, every member of which must be good. Quantifiers over all sets,
including the one hidden in the implication clause, run over a finite
search universe; when every case found passes, the honest answer is
Unknown(search-bound) unless the range was exhaustive.
"""

import logging
from typing import Iterable, Optional

from hf_workbench.resources.erecursion.machine import apply
from hf_workbench.resources.erecursion.model import (
    ApplyError,
    Outcome,
    Timeout,
    Value,
)
from hf_workbench.resources.formula.analysis import is_bounded
from hf_workbench.resources.formula.model import (
    And,
    BExists,
    BForall,
    Eq,
    Falsum,
    Formula,
    Imp,
    In,
    Or,
    SubExists,
    SubForall,
    UExists,
    UForall,
)
from hf_workbench.resources.hfset.model import (
    HFSet,
    as_pair,
    numeral,
    subsets,
)
from hf_workbench.resources.hfset.sampling import hfsets_of_rank
from hf_workbench.resources.oracle.evaluator import eval_formula, value_of
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.realizability.enums import Variant
from hf_workbench.resources.realizability.model import (
    BEYOND_SEARCH,
    NOT_REALIZED,
    OUT_OF_FUEL,
    REALIZED,
    Verdict,
    every,
    holds,
)
from hf_workbench.settings import get_settings

logger = logging.getLogger(__name__)

ZERO, ONE = numeral(0), numeral(1)


def search_universe(search_rank: Optional[int] = None) -> tuple[HFSet, ...]:
    """Every HF set of rank at most `search_rank`."""
    rank = get_settings().SEARCH_RANK if search_rank is None else search_rank
    return hfsets_of_rank(rank + 1)


class Realizability:
    def __init__(
        self,
        variant: Variant = Variant.WT,
        fuel: Optional[int] = None,
        search: Optional[Iterable[HFSet]] = None,
        closed_world: bool = False,
    ):
        settings = get_settings()
        self.variant = variant
        self.fuel = settings.FUEL if fuel is None else fuel
        self.search = (
            search_universe() if search is None else tuple(search)
        )
        self.closed_world = closed_world
        self.cap = settings.POWERSET_CAP
        self.memo: dict[tuple, Verdict] = {}

    @property
    def pmode(self) -> bool:
        return self.variant == Variant.WP

    @property
    def universe(self) -> HFSet:
        return HFSet.of(self.search)

    def outcome_verdict(self, outcome: Outcome) -> Optional[Verdict]:
        """Verdict forced by an undefined application, if any."""
        match outcome:
            case Value():
                return None
            case Timeout():
                return OUT_OF_FUEL
            case ApplyError():
                return NOT_REALIZED
        # ω is a set, just not a hereditarily finite one
        return BEYOND_SEARCH

    def applied(self, a: HFSet, c: HFSet, phi: Formula, env: Env) -> Verdict:
        """[a](c) ⊩ φ."""
        outcome = apply(a, c, self.fuel, self.pmode)
        forced = self.outcome_verdict(outcome)
        if forced is not None:
            return forced
        return self.check(outcome.value, phi, env)

    def beyond_search(self, verdict: Verdict) -> Verdict:
        """A quantifier over every set that passed on the search range."""
        if verdict.realized and not self.closed_world:
            return BEYOND_SEARCH
        return verdict

    def truth(self, phi: Formula, env: Env) -> Verdict:
        if is_bounded(phi):
            return holds(eval_formula(phi, env, self.cap))
        if self.closed_world:
            bounded = Env(env.assignment, self.universe)
            return holds(eval_formula(phi, bounded, self.cap))
        return BEYOND_SEARCH

    def family(self, a: HFSet, each) -> Verdict:
        """∃u (u ∈ a) and every d ∈ a is a pair satisfying `each`."""
        if not a:
            return NOT_REALIZED
        return every(
            NOT_REALIZED if as_pair(d) is None else each(*as_pair(d))
            for d in a.ordered()
        )

    def subset_range(self, bound: HFSet) -> Optional[list[HFSet]]:
        if len(bound) > self.cap:
            return None
        return list(subsets(bound))

    def check(self, a: HFSet, phi: Formula, env: Env) -> Verdict:
        key = (a, phi, frozenset(env.assignment.items()))
        if key not in self.memo:
            self.memo[key] = self.clause(a, phi, env)
        return self.memo[key]

    def clause(self, a: HFSet, phi: Formula, env: Env) -> Verdict:
        match phi:
            case Falsum() | Eq() | In():
                return holds(eval_formula(phi, env, self.cap))
            case And(left, right):
                found = as_pair(a)
                if found is None:
                    return NOT_REALIZED
                return every(
                    (
                        self.check(found[0], left, env),
                        self.check(found[1], right, env),
                    )
                )
            case Or(left, right):

                def tagged(tag: HFSet, realizer: HFSet) -> Verdict:
                    if tag is ZERO:
                        return self.check(realizer, left, env)
                    if tag is ONE:
                        return self.check(realizer, right, env)
                    return NOT_REALIZED

                return self.family(a, tagged)
            case Imp(left, right):
                return self.implication(a, left, right, env)
            case BForall(var, bound, body):
                return every(
                    self.applied(a, c, body, env.bind(var, c))
                    for c in value_of(bound, env).ordered()
                )
            case BExists(var, bound, body):
                members = value_of(bound, env)
                return self.family(
                    a,
                    lambda w, r: (
                        self.check(r, body, env.bind(var, w))
                        if w in members
                        else NOT_REALIZED
                    ),
                )
            case SubForall(var, bound, body):
                candidates = self.subset_range(value_of(bound, env))
                if candidates is None:
                    return BEYOND_SEARCH
                return every(
                    self.applied(a, c, body, env.bind(var, c))
                    for c in candidates
                )
            case SubExists(var, bound, body):
                members = value_of(bound, env)
                return self.family(
                    a,
                    lambda w, r: (
                        self.check(r, body, env.bind(var, w))
                        if w <= members
                        else NOT_REALIZED
                    ),
                )
            case UForall(var, body):
                return self.beyond_search(
                    every(
                        self.applied(a, c, body, env.bind(var, c))
                        for c in self.search
                    )
                )
            case UExists(var, body):
                return self.family(
                    a, lambda w, r: self.check(r, body, env.bind(var, w))
                )
        raise TypeError(f'Unknown formula node {phi!r}')

    def implication(
        self, a: HFSet, left: Formula, right: Formula, env: Env
    ) -> Verdict:
        truth = REALIZED
        if self.variant != Variant.W:
            truth = self.truth(Imp(left, right), env)
            if truth.refuted:
                return truth
        # a false bounded premise has no realizer at all
        if is_bounded(left) and not eval_formula(left, env, self.cap):
            return truth

        def case(c: HFSet) -> Verdict:
            premise = self.check(c, left, env)
            if premise.refuted:
                return REALIZED
            conclusion = self.applied(a, c, right, env)
            if premise.realized or conclusion.realized:
                return conclusion
            return premise

        cases = every(case(c) for c in self.search)
        return every((truth, self.beyond_search(cases)))


def check_wt(
    a: HFSet,
    phi: Formula,
    env: Optional[Env] = None,
    fuel: Optional[int] = None,
    search: Optional[Iterable[HFSet]] = None,
    closed_world: bool = False,
) -> Verdict:
    """
    a ⊩wt φ at the given fuel and search universe.

    :return: Verdict.
    """
    checker = Realizability(Variant.WT, fuel, search, closed_world)
    return checker.check(a, phi, env or Env())


def check_w(
    a: HFSet,
    phi: Formula,
    env: Optional[Env] = None,
    fuel: Optional[int] = None,
    search: Optional[Iterable[HFSet]] = None,
    closed_world: bool = False,
) -> Verdict:
    """a ⊩w φ: the implication clause drops its truth conjunct."""
    checker = Realizability(Variant.W, fuel, search, closed_world)
    return checker.check(a, phi, env or Env())


def check_wp(
    a: HFSet,
    phi: Formula,
    env: Optional[Env] = None,
    fuel: Optional[int] = None,
    search: Optional[Iterable[HFSet]] = None,
    closed_world: bool = False,
) -> Verdict:
    """a ⊩wt^℘ φ, with the machine in powerset mode."""
    checker = Realizability(Variant.WP, fuel, search, closed_world)
    return checker.check(a, phi, env or Env())


CHECKERS = {
    Variant.WT: check_wt,
    Variant.W: check_w,
    Variant.WP: check_wp,
}
