import itertools
import logging
from typing import Mapping, Optional, Sequence

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
    Var,
    all_names,
    fresh_name,
    free_vars,
)
from hf_workbench.resources.formula.printer import to_text
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.kripke.model import (
    Element,
    KripkeModel,
    Node,
)
from hf_workbench.resources.kripke.schemas import UNKNOWN_CONSTANT
from hf_workbench.resources.kripke.validate import require_valid
from hf_workbench.resources.shared.errors import (
    InvalidModel,
    UnboundVariable,
)
from hf_workbench.resources.shared.schemas import Report

logger = logging.getLogger(__name__)


def unfold(phi: Formula) -> Formula:
    """Bounded quantifiers as their unbounded definitions."""
    match phi:
        case BForall(var, bound, body):
            return UForall(var, Imp(In(Var(var), bound), body))
        case BExists(var, bound, body):
            return UExists(var, And(In(Var(var), bound), body))
        case SubForall(var, bound, body) | SubExists(var, bound, body):
            z = fresh_name('z', all_names(phi))
            inside = UForall(z, Imp(In(Var(z), Var(var)), In(Var(z), bound)))
            if isinstance(phi, SubForall):
                return UForall(var, Imp(inside, body))
            return UExists(var, And(inside, body))
    return phi


class Forcing:
    """
    The forcing relation of one validated model, memoized per
    (node, formula, assignment).
    """

    def __init__(self, model: KripkeModel, validated: bool = False):
        self.model = model if validated else require_valid(model)
        self.memo: dict[tuple, bool] = {}

    def value(self, t: Term, p: Node, assignment: Mapping) -> Element:
        if isinstance(t, Const):
            name = to_literal(t.value)
            if name not in self.model.structure(p).class_of:
                raise InvalidModel(f'{UNKNOWN_CONSTANT}: {name} at {p}')
            return name
        if t.name not in assignment:
            raise UnboundVariable(t.name)
        return assignment[t.name]

    def forces(
        self, p: Node, phi: Formula, assignment: Mapping[str, Element]
    ) -> bool:
        key = (p, phi, frozenset(assignment.items()))
        if key not in self.memo:
            self.memo[key] = self.clause(p, phi, assignment)
        return self.memo[key]

    def above(self, p: Node, assignment: Mapping[str, Element]):
        for q in self.model.frame.cone(p):
            yield q, self.model.transport(p, q, assignment)

    def clause(
        self, p: Node, phi: Formula, assignment: Mapping[str, Element]
    ) -> bool:
        structure = self.model.structure(p)
        match phi:
            case Falsum():
                return False
            case Eq(left, right):
                return structure.equal(
                    self.value(left, p, assignment),
                    self.value(right, p, assignment),
                )
            case In(left, right):
                return structure.member(
                    self.value(left, p, assignment),
                    self.value(right, p, assignment),
                )
            case And(left, right):
                return self.forces(p, left, assignment) and self.forces(
                    p, right, assignment
                )
            case Or(left, right):
                return self.forces(p, left, assignment) or self.forces(
                    p, right, assignment
                )
            case Imp(left, right):
                return all(
                    not self.forces(q, left, moved)
                    or self.forces(q, right, moved)
                    for q, moved in self.above(p, assignment)
                )
            case UForall(var, body):
                return all(
                    self.forces(q, body, {**moved, var: d})
                    for q, moved in self.above(p, assignment)
                    for d in self.model.structure(q).domain
                )
            case UExists(var, body):
                return any(
                    self.forces(p, body, {**assignment, var: d})
                    for d in structure.domain
                )
            case BForall() | BExists() | SubForall() | SubExists():
                return self.forces(p, unfold(phi), assignment)
        raise TypeError(f'Unknown formula node {phi!r}')


def forces(
    m: KripkeModel,
    p: Node,
    phi: Formula,
    assignment: Optional[Mapping[str, Element]] = None,
) -> bool:
    """
    p ⊩ φ[assignment]. ⊥ is never forced, ∧ and ∨ are pointwise, → and ∀
    range over the cone of p with the assignment transported by ι, and ∃
    is witnessed at p itself.

    :return: bool.
    """
    return Forcing(m).forces(p, phi, dict(assignment or {}))


def failing_nodes(m: KripkeModel, phi: Formula) -> list[Node]:
    forcing = Forcing(m)
    return [p for p in m.frame.nodes if not forcing.forces(p, phi, {})]


def valid_in_model(m: KripkeModel, phi: Formula) -> bool:
    """Every node forces the closed formula φ."""
    return not failing_nodes(m, phi)


def assignments(
    m: KripkeModel, p: Node, names: Sequence[str]
) -> list[dict[str, Element]]:
    domain = m.structure(p).domain
    return [
        dict(zip(names, values))
        for values in itertools.product(domain, repeat=len(names))
    ]


def check_persistence(m: KripkeModel, formulas: Sequence[Formula]) -> Report:
    """
    If p ⊩ φ(d̄) and p R q then q ⊩ φ(ι_{p,q}(d̄)), for every node, every
    assignment of the free variables, and every formula given.
    """
    forcing = Forcing(m)
    report = Report(name='kripke-persistence')
    for phi in formulas:
        names = free_vars(phi)
        for p in m.frame.nodes:
            for assignment in assignments(m, p, names):
                if not forcing.forces(p, phi, assignment):
                    continue
                for q, moved in forcing.above(p, assignment):
                    report.record(
                        forcing.forces(q, phi, moved),
                        f'{p} forces {to_text(phi)} but {q} does not',
                    )
    return report


def check_truncation(m: KripkeModel, formulas: Sequence[Formula]) -> Report:
    """Validity in 𝒦 carries over to every cone 𝒦ᵖ."""
    report = Report(name='kripke-truncation')
    for phi in formulas:
        if free_vars(phi) or not valid_in_model(m, phi):
            continue
        for p in m.frame.nodes:
            report.record(
                valid_in_model(m.truncate(p), phi),
                f'{to_text(phi)} valid but not in the cone of {p}',
            )
    return report
