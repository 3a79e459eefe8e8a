import logging
from typing import Mapping, Optional

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
from hf_workbench.resources.fullmodel.model import KName
from hf_workbench.resources.fullmodel.names import canonical, restrict
from hf_workbench.resources.fullmodel.universe import (
    Universe,
    build_universe,
)
from hf_workbench.resources.kripke.forcing import unfold
from hf_workbench.resources.kripke.model import Frame, Node
from hf_workbench.resources.shared.errors import UnboundVariable
from hf_workbench.settings import get_settings

logger = logging.getLogger(__name__)

Params = Mapping[str, KName]


def restrict_all(params: Params, q: Node) -> dict[str, KName]:
    return {name: restrict(g, q) for name, g in params.items()}


class NameForcing:
    """
    Forcing over names at a cutoff. Atoms are literal: p ⊩ g ∈ h iff
    g ↾ p ∈ h(p), and p ⊩ g = h iff g ↾ p and h ↾ p are the same name.
    Bounded quantifiers range over the bound's graph at each cone node;
    unbounded ones over the generated universe.
    """

    def __init__(
        self,
        frame: Frame,
        cutoff: Optional[int] = None,
        universe: Optional[Universe] = None,
    ):
        self.frame = frame
        self.cutoff = get_settings().NAME_CUTOFF if cutoff is None else cutoff
        self._universe = universe
        self.memo: dict[tuple, bool] = {}

    @property
    def universe(self) -> Universe:
        if self._universe is None:
            self._universe = build_universe(self.frame, self.cutoff)
        return self._universe

    def value(self, t: Term, p: Node, params: Params) -> KName:
        if isinstance(t, Const):
            return canonical(t.value, self.frame, p)
        if t.name not in params:
            raise UnboundVariable(t.name)
        return restrict(params[t.name], p)

    def cone(self, p: Node, params: Params):
        for q in self.frame.cone(p):
            yield q, restrict_all(params, q)

    def forces(self, p: Node, phi: Formula, params: Params) -> bool:
        params = restrict_all(params, p)
        key = (p, phi, frozenset(params.items()))
        if key not in self.memo:
            self.memo[key] = self.clause(p, phi, params)
        return self.memo[key]

    def clause(self, p: Node, phi: Formula, params: Params) -> bool:
        match phi:
            case Falsum():
                return False
            case Eq(left, right):
                return self.value(left, p, params) == self.value(
                    right, p, params
                )
            case In(left, right):
                return self.value(left, p, params) in self.value(
                    right, p, params
                )[p]
            case And(left, right):
                return self.forces(p, left, params) and self.forces(
                    p, right, params
                )
            case Or(left, right):
                return self.forces(p, left, params) or self.forces(
                    p, right, params
                )
            case Imp(left, right):
                return all(
                    not self.forces(q, left, moved)
                    or self.forces(q, right, moved)
                    for q, moved in self.cone(p, params)
                )
            case UForall(var, body):
                return all(
                    self.forces(q, body, {**moved, var: d})
                    for q, moved in self.cone(p, params)
                    for d in self.universe[q]
                )
            case UExists(var, body):
                return any(
                    self.forces(p, body, {**params, var: d})
                    for d in self.universe[p]
                )
            case BForall(var, bound, body):
                return all(
                    self.forces(q, body, {**moved, var: d})
                    for q, moved in self.cone(p, params)
                    for d in self.value(bound, q, moved)[q]
                )
            case BExists(var, bound, body):
                return any(
                    self.forces(p, body, {**params, var: d})
                    for d in self.value(bound, p, params)[p]
                )
            case SubForall() | SubExists():
                return self.forces(p, unfold(phi), params)
        raise TypeError(f'Unknown formula node {phi!r}')


def forces_name(
    frame: Frame,
    p: Node,
    phi: Formula,
    params: Optional[Params] = None,
    cutoff: Optional[int] = None,
) -> bool:
    """
    p ⊩ φ with name parameters, at the given cutoff.

    :return: bool.
    """
    return NameForcing(frame, cutoff).forces(p, phi, dict(params or {}))
