import logging
from typing import Optional, Sequence

from hf_workbench.resources.compiler.model import CompilationResult
from hf_workbench.resources.compiler.schemas import (
    DUPLICATE_VARIABLE,
    NO_VARIABLES,
    NOT_SIGMA0,
    POSITION_OUT_OF_RANGE,
)
from hf_workbench.resources.formula.analysis import is_sigma0
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
    Term,
    Var,
    all_names,
    fresh_name,
    free_vars,
    rename_clashing_binders,
)
from hf_workbench.resources.hfset.model import hf
from hf_workbench.resources.operations.enums import OpCode
from hf_workbench.resources.operations.evaluator import kuratowski_term
from hf_workbench.resources.operations.model import (
    App2,
    OpTerm,
    TermConst,
    TermVar,
    term_depth,
    term_size,
)
from hf_workbench.resources.shared.errors import NotSigma0, UnboundVariable

logger = logging.getLogger(__name__)

STAGE_SLACK = 2


class SeparationCompiler:
    """
    Translates a Σ₀ formula φ(x_1, ..., x_n) into a term over the 13
    fundamental operations computing

        {<x_n, ..., x_1> ∈ a_n × ... × a_1 | φ}

    where a_j is the term supplied for x_j.

    Atoms are placed into full tuples with abc/acb/times. A membership
    atom whose container is the inner variable, and every atom with an
    HF constant, is first rewritten to a bounded ∃ over a fresh outermost
    variable. Quantifiers bounded by a variable x_j range over ⋃a_j with
    the membership test moved into the body.
    """

    def __init__(self, taken: set[str]):
        self.taken = set(taken)
        self.products: dict[tuple[int, ...], OpTerm] = {}

    def fresh(self, base: str) -> str:
        name = fresh_name(base, self.taken)
        self.taken.add(name)
        return name

    def product(self, args: Sequence[OpTerm]) -> OpTerm:
        """a_n × (a_{n-1} × ... × (a_2 × a_1)); a_1 itself when n = 1."""
        key = tuple(id(a) for a in args)
        if key not in self.products:
            if len(args) == 1:
                self.products[key] = args[0]
            else:
                self.products[key] = App2(
                    OpCode.TIMES, args[-1], self.product(args[:-1])
                )
        return self.products[key]

    def empty(self, args: Sequence[OpTerm]) -> OpTerm:
        whole = self.product(args)
        return App2(OpCode.DIFF, whole, whole)

    def index(self, name: str, vars: Sequence[str]) -> int:
        if name not in vars:
            raise UnboundVariable(name)
        return vars.index(name) + 1

    def compile(
        self, phi: Formula, vars: list[str], args: list[OpTerm]
    ) -> OpTerm:
        match phi:
            case Falsum():
                return self.empty(args)
            case Eq() | In():
                return self.atom(phi, vars, args)
            case And(left, right):
                kept = self.compile(right, vars, args)
                return App2(
                    OpCode.INTER,
                    self.compile(left, vars, args),
                    App2(OpCode.PAIR, kept, kept),
                )
            case Or(left, right):
                first = self.compile(left, vars, args)
                second = self.compile(right, vars, args)
                return App2(
                    OpCode.UNION, App2(OpCode.PAIR, first, second), first
                )
            case Imp(left, right):
                return App2(
                    OpCode.IMP,
                    self.product(args),
                    kuratowski_term(
                        self.compile(left, vars, args),
                        self.compile(right, vars, args),
                    ),
                )
            case BForall(var, bound, body):
                bound_term, body = self.bounded(
                    var, bound, body, vars, args, Imp
                )
                return self.forall(var, bound_term, body, vars, args)
            case BExists(var, bound, body):
                bound_term, body = self.bounded(
                    var, bound, body, vars, args, And
                )
                return self.exists(var, bound_term, body, vars, args)
        raise NotSigma0(NOT_SIGMA0)

    def bounded(
        self,
        var: str,
        bound: Term,
        body: Formula,
        vars: list[str],
        args: list[OpTerm],
        connective: type,
    ) -> tuple[OpTerm, Formula]:
        if isinstance(bound, Const):
            return TermConst(bound.value), body
        j = self.index(bound.name, vars)
        guard = In(Var(var), Var(bound.name))
        # ⋃a_j contains every possible value of x_j
        hull = App2(OpCode.UNION, args[j - 1], args[j - 1])
        return hull, connective(guard, body)

    def forall(
        self,
        var: str,
        bound: OpTerm,
        body: Formula,
        vars: list[str],
        args: list[OpTerm],
    ) -> OpTerm:
        inner = self.compile(body, [*vars, var], [*args, bound])
        return App2(
            OpCode.INTER,
            self.product(args),
            App2(OpCode.FORALL, inner, bound),
        )

    def exists(
        self,
        var: str,
        bound: OpTerm,
        body: Formula,
        vars: list[str],
        args: list[OpTerm],
    ) -> OpTerm:
        inner = self.compile(body, [*vars, var], [*args, bound])
        return App2(OpCode.RAN, inner, inner)

    def atom(
        self, phi: Eq | In, vars: list[str], args: list[OpTerm]
    ) -> OpTerm:
        left, right = phi.left, phi.right
        if isinstance(left, Const) and isinstance(right, Const):
            if isinstance(phi, Eq):
                holds = left.value is right.value
            else:
                holds = left.value in right.value
            return self.product(args) if holds else self.empty(args)
        if isinstance(left, Const) or isinstance(right, Const):
            return self.constant_atom(phi, vars, args)
        i = self.index(left.name, vars)
        j = self.index(right.name, vars)
        if i == j:
            if isinstance(phi, Eq):
                return self.product(args)
            return self.empty(args)
        if isinstance(phi, Eq):
            inner, outer = min(i, j), max(i, j)
            relation = App2(OpCode.EQ, args[inner - 1], args[outer - 1])
            return self.place(relation, inner, outer, args)
        if i < j:
            relation = App2(OpCode.IN, args[i - 1], args[j - 1])
            return self.place(relation, i, j, args)
        # x_i ∈ x_j with j inner: ∃y ∈ a_j (y = x_j ∧ x_i ∈ y)
        y = self.fresh('y')
        body = And(Eq(Var(y), right), In(left, Var(y)))
        return self.exists(y, args[j - 1], body, vars, args)

    def constant_atom(
        self, phi: Eq | In, vars: list[str], args: list[OpTerm]
    ) -> OpTerm:
        """An atom mentioning c becomes ∃y ∈ {c} with y in place of c."""
        y = self.fresh('y')
        if isinstance(phi.left, Const):
            value, rewritten = phi.left.value, type(phi)(Var(y), phi.right)
        else:
            value, rewritten = phi.right.value, type(phi)(phi.left, Var(y))
        return self.exists(y, TermConst(hf(value)), rewritten, vars, args)

    def place(
        self, relation: OpTerm, inner: int, outer: int, args: list[OpTerm]
    ) -> OpTerm:
        """
        Extends a set of pairs <x_outer, x_inner> to the full tuples of
        a_n × ... × a_1 that carry them.
        """
        placed = relation
        if inner > 1:
            placed = App2(OpCode.ABC, placed, self.product(args[: inner - 1]))
        for k in range(inner + 1, outer):
            placed = App2(OpCode.ACB, placed, args[k - 1])
        for k in range(outer + 1, len(args) + 1):
            placed = App2(OpCode.TIMES, args[k - 1], placed)
        return placed


def prepare(phi: Formula, vars: Sequence[str]) -> Formula:
    if not vars:
        raise ValueError(NO_VARIABLES)
    if len(set(vars)) != len(vars):
        raise ValueError(DUPLICATE_VARIABLE)
    if not is_sigma0(phi):
        raise NotSigma0(NOT_SIGMA0)
    for name in free_vars(phi):
        if name not in vars:
            raise UnboundVariable(name)
    return rename_clashing_binders(phi, taken=set(vars))


def compile_term(
    phi: Formula,
    vars: Sequence[str],
    args: Optional[Sequence[OpTerm]] = None,
) -> OpTerm:
    """
    The comprehension term for `phi` over `vars`; `args` default to the
    variables themselves.

    :return: OpTerm.
    """
    phi = prepare(phi, vars)
    args = [TermVar(v) for v in vars] if args is None else list(args)
    compiler = SeparationCompiler(all_names(phi) | set(vars))
    term = compiler.compile(phi, list(vars), args)
    logger.debug(
        'compiled %d variables: depth %d, %d nodes',
        len(vars),
        term_depth(term),
        term_size(term),
    )
    return term


def compile_comprehension(
    phi: Formula, vars: Sequence[str]
) -> CompilationResult:
    term = compile_term(phi, vars)
    return CompilationResult(
        term=term,
        var_order=tuple(vars),
        stage_bound=term_depth(term) + STAGE_SLACK,
    )


def separation_parameter(phi: Formula, vars: Sequence[str]) -> str:
    taken = set(vars) | all_names(phi)
    return 'a' if 'a' not in taken else fresh_name('a', taken)


def compile_separation(
    phi: Formula, i: int, vars: Sequence[str]
) -> CompilationResult:
    """
    Term for {x_i ∈ a | φ}: the other arguments are singletons {x_j},
    then ran is applied n - i times, followed by dom when i ≥ 2.

    :return: CompilationResult whose `parameter` names the set a.
    """
    if not 1 <= i <= len(vars):
        raise ValueError(POSITION_OUT_OF_RANGE)
    parameter = separation_parameter(phi, vars)
    args: list[OpTerm] = []
    for j, name in enumerate(vars, start=1):
        if j == i:
            args.append(TermVar(parameter))
        else:
            x = TermVar(name)
            args.append(App2(OpCode.PAIR, x, x))
    term = compile_term(phi, vars, args)
    for _ in range(len(vars) - i):
        term = App2(OpCode.RAN, term, term)
    if i >= 2:  # noqa: PLR2004
        term = App2(OpCode.DOM, term, term)
    return CompilationResult(
        term=term,
        var_order=tuple(vars),
        stage_bound=term_depth(term) + STAGE_SLACK,
        parameter=parameter,
    )


def stage_bound(phi: Formula) -> int:
    """
    Sound stage bound k: the separation set {x_1 ∈ a | φ} lies k stages
    above the stage holding a and the parameters.
    """
    vars = free_vars(phi) or [fresh_name('x', all_names(phi))]
    return compile_separation(phi, 1, vars).stage_bound
