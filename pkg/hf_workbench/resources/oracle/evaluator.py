import itertools
import logging
from typing import Optional, Sequence

from hf_workbench.resources.formula.analysis import is_bounded
from hf_workbench.resources.formula.model import (
    And,
    BExists,
    BForall,
    Const,
    Eq,
    Falsum,
    Formula,
    Imp,
    In,
    Or,
    SubExists,
    SubForall,
    Term,
    UExists,
    UForall,
)
from hf_workbench.resources.hfset.model import (
    HFSet,
    make_tuple,
    subsets,
)
from hf_workbench.resources.hfset.schemas import POWERSET_TOO_LARGE
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.oracle.schemas import (
    NO_VARIABLES,
    NOT_BOUNDED,
    UNBOUNDED_WITHOUT_UNIVERSE,
    VARS_ARGS_MISMATCH,
)
from hf_workbench.resources.shared.errors import (
    BudgetExceeded,
    NotSigma0,
    UnboundedWithoutUniverse,
    UnboundVariable,
)
from hf_workbench.settings import get_settings

logger = logging.getLogger(__name__)


def value_of(t: Term, env: Env) -> HFSet:
    if isinstance(t, Const):
        return t.value
    if t.name not in env:
        raise UnboundVariable(t.name)
    return env[t.name]


def subset_range(bound: HFSet, cap: int) -> list[HFSet]:
    if len(bound) > cap:
        raise BudgetExceeded(POWERSET_TOO_LARGE)
    return list(subsets(bound))


def eval_formula(
    phi: Formula, env: Env, cap: Optional[int] = None
) -> bool:
    """
    Classical truth of `phi` under `env`, by structural recursion.

    ⊆-bounded quantifiers range over the powerset of the bound, capped at
    `cap` base elements (POWERSET_CAP by default). Unbounded quantifiers
    range over `env.universe_bound`.

    :return: bool.
    """
    cap = get_settings().POWERSET_CAP if cap is None else cap

    def truth(f: Formula, env: Env) -> bool:
        match f:
            case Falsum():
                return False
            case Eq(left, right):
                return value_of(left, env) is value_of(right, env)
            case In(left, right):
                return value_of(left, env) in value_of(right, env)
            case And(left, right):
                return truth(left, env) and truth(right, env)
            case Or(left, right):
                return truth(left, env) or truth(right, env)
            case Imp(left, right):
                return not truth(left, env) or truth(right, env)
            case BForall(var, bound, body):
                members = value_of(bound, env)
                return all(truth(body, env.bind(var, e)) for e in members)
            case BExists(var, bound, body):
                members = value_of(bound, env)
                return any(truth(body, env.bind(var, e)) for e in members)
            case SubForall(var, bound, body):
                members = subset_range(value_of(bound, env), cap)
                return all(truth(body, env.bind(var, e)) for e in members)
            case SubExists(var, bound, body):
                members = subset_range(value_of(bound, env), cap)
                return any(truth(body, env.bind(var, e)) for e in members)
            case UForall(var, body) | UExists(var, body):
                if env.universe_bound is None:
                    raise UnboundedWithoutUniverse(UNBOUNDED_WITHOUT_UNIVERSE)
                test = all if isinstance(f, UForall) else any
                return test(
                    truth(body, env.bind(var, e)) for e in env.universe_bound
                )
        raise TypeError(f'Unknown formula node {f!r}')

    return truth(phi, env)


def eval_term_formula(phi: Formula, universe: Optional[HFSet] = None) -> bool:
    """Truth of a closed formula."""
    return eval_formula(phi, Env(universe_bound=universe))


def comprehension(
    phi: Formula, vars: Sequence[str], args: Sequence[HFSet]
) -> HFSet:
    """
    {<x_n, ..., x_1> ∈ a_n × ... × a_1 | φ}; for one variable the
    elements of a_1 themselves.

    :return: HFSet.
    """
    if not vars:
        raise ValueError(NO_VARIABLES)
    if len(vars) != len(args):
        raise ValueError(VARS_ARGS_MISMATCH)
    if not is_bounded(phi):
        raise NotSigma0(NOT_BOUNDED)
    members = []
    for values in itertools.product(*(a.ordered() for a in args)):
        env = Env(dict(zip(vars, values)))
        if eval_formula(phi, env):
            members.append(make_tuple(list(reversed(values))))
    logger.debug('comprehension kept %d tuples', len(members))
    return HFSet.of(members)
