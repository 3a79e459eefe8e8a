from dataclasses import dataclass, field, replace
from functools import reduce
from typing import Iterator, Optional, Union

from hf_workbench.resources.hfset.model import HFSet


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: HFSet


Term = Union[Var, Const]


@dataclass(frozen=True)
class Formula:
    """Base of the formula AST. `pos` is the source offset, if parsed."""

    pos: Optional[int] = field(
        default=None, compare=False, repr=False, kw_only=True
    )


@dataclass(frozen=True)
class Falsum(Formula):
    pass


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class In(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class BForall(Formula):
    var: str
    bound: Term
    body: Formula


@dataclass(frozen=True)
class BExists(Formula):
    var: str
    bound: Term
    body: Formula


@dataclass(frozen=True)
class SubForall(Formula):
    var: str
    bound: Term
    body: Formula


@dataclass(frozen=True)
class SubExists(Formula):
    var: str
    bound: Term
    body: Formula


@dataclass(frozen=True)
class UForall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class UExists(Formula):
    var: str
    body: Formula


Atom = (Eq, In)
Binary = (And, Or, Imp)
BoundedQuantifier = (BForall, BExists, SubForall, SubExists)
Quantified = (BForall, BExists, SubForall, SubExists, UForall, UExists)
Universal = (BForall, SubForall, UForall)


def negate(phi: Formula) -> Formula:
    return Imp(phi, Falsum())


def is_negation(phi: Formula) -> bool:
    return isinstance(phi, Imp) and isinstance(phi.right, Falsum)


def conj(formulas: list[Formula]) -> Formula:
    """Left fold with `&`; the empty conjunction is `~false`."""
    if not formulas:
        return negate(Falsum())
    return reduce(And, formulas)


def disj(formulas: list[Formula]) -> Formula:
    if not formulas:
        return Falsum()
    return reduce(Or, formulas)


def term_names(t: Term) -> Iterator[str]:
    if isinstance(t, Var):
        yield t.name


def free_vars(phi: Formula) -> list[str]:
    """Free variables in order of first occurrence."""
    seen: dict[str, None] = {}

    def visit(f: Formula, bound: frozenset[str]) -> None:
        if isinstance(f, Atom):
            for t in (f.left, f.right):
                for name in term_names(t):
                    if name not in bound:
                        seen.setdefault(name)
        elif isinstance(f, Binary):
            visit(f.left, bound)
            visit(f.right, bound)
        elif isinstance(f, BoundedQuantifier):
            for name in term_names(f.bound):
                if name not in bound:
                    seen.setdefault(name)
            visit(f.body, bound | {f.var})
        elif isinstance(f, (UForall, UExists)):
            visit(f.body, bound | {f.var})

    visit(phi, frozenset())
    return list(seen)


def all_names(phi: Formula) -> set[str]:
    """Every variable name occurring in `phi`, bound or free."""
    names: set[str] = set()
    for f in walk(phi):
        if isinstance(f, Atom):
            names.update(term_names(f.left))
            names.update(term_names(f.right))
        elif isinstance(f, Quantified):
            names.add(f.var)
            if isinstance(f, BoundedQuantifier):
                names.update(term_names(f.bound))
    return names


def walk(phi: Formula) -> Iterator[Formula]:
    stack = [phi]
    while stack:
        f = stack.pop()
        yield f
        if isinstance(f, Binary):
            stack.extend((f.right, f.left))
        elif isinstance(f, Quantified):
            stack.append(f.body)


def depth(phi: Formula) -> int:
    if isinstance(phi, Binary):
        return 1 + max(depth(phi.left), depth(phi.right))
    if isinstance(phi, Quantified):
        return 1 + depth(phi.body)
    return 0


def fresh_name(base: str, taken: set[str]) -> str:
    k = 1
    while f'{base}_{k}' in taken:
        k += 1
    return f'{base}_{k}'


def substitute_term(t: Term, name: str, value: Term) -> Term:
    if isinstance(t, Var) and t.name == name:
        return value
    return t


def substitute(phi: Formula, name: str, value: Term) -> Formula:
    """Capture-avoiding substitution of `value` for free `name`."""
    if isinstance(phi, Atom):
        return replace(
            phi,
            left=substitute_term(phi.left, name, value),
            right=substitute_term(phi.right, name, value),
        )
    if isinstance(phi, Binary):
        return replace(
            phi,
            left=substitute(phi.left, name, value),
            right=substitute(phi.right, name, value),
        )
    if isinstance(phi, Quantified):
        changes = {}
        if isinstance(phi, BoundedQuantifier):
            changes['bound'] = substitute_term(phi.bound, name, value)
        if phi.var == name:
            return replace(phi, **changes)
        body = phi.body
        var = phi.var
        if isinstance(value, Var) and value.name == var:
            var = fresh_name(var, all_names(body) | {name, value.name})
            body = substitute(body, phi.var, Var(var))
        return replace(
            phi, var=var, body=substitute(body, name, value), **changes
        )
    return phi


def rename_clashing_binders(
    phi: Formula, taken: Optional[set[str]] = None
) -> Formula:
    """
    Renames every binder that reuses a free variable of `phi` or the name
    of an enclosing binder to `name_1`, `name_2`, ...
    """
    used = all_names(phi)
    if taken is None:
        taken = set(free_vars(phi))

    def visit(f: Formula, scope: frozenset[str]) -> Formula:
        if isinstance(f, Binary):
            return replace(
                f, left=visit(f.left, scope), right=visit(f.right, scope)
            )
        if isinstance(f, Quantified):
            var = f.var
            body = f.body
            if var in scope:
                var = fresh_name(f.var, used | scope)
                used.add(var)
                body = substitute(body, f.var, Var(var))
            return replace(f, var=var, body=visit(body, scope | {var}))
        return f

    return visit(phi, frozenset(taken))
