from dataclasses import dataclass, field, fields
from typing import Iterator, Union

from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import HFSet
from hf_workbench.resources.operations.enums import OpCode
from hf_workbench.resources.operations.schemas import (
    ARITY_MISMATCH,
    BAD_TERM_FORM,
    UNKNOWN_OPCODE,
)
from hf_workbench.resources.shared.errors import TermSyntaxError
from hf_workbench.resources.shared.sexpr import SExpr, read_sexpr


@dataclass(frozen=True)
class _Node:
    """Terms are DAGs: the structural hash is computed once per node."""

    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        values = tuple(
            getattr(self, f.name) for f in fields(self) if f.compare
        )
        digest = hash((type(self).__name__, values))
        object.__setattr__(self, '_hash', digest)

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True, eq=True)
class TermVar(_Node):
    name: str


@dataclass(frozen=True, eq=True)
class TermConst(_Node):
    value: HFSet


@dataclass(frozen=True, eq=True)
class App2(_Node):
    code: OpCode
    left: 'OpTerm'
    right: 'OpTerm'

    def __post_init__(self):
        if self.code.arity != 2:  # noqa: PLR2004
            raise ValueError(f'{ARITY_MISMATCH}: {self.code.value}')
        super().__post_init__()


@dataclass(frozen=True, eq=True)
class App3(_Node):
    code: OpCode
    first: 'OpTerm'
    second: 'OpTerm'
    third: 'OpTerm'

    def __post_init__(self):
        if self.code.arity != 3:  # noqa: PLR2004
            raise ValueError(f'{ARITY_MISMATCH}: {self.code.value}')
        super().__post_init__()


# Generated dataclass hashes are uncached; keep the one from _Node.
for _cls in (TermVar, TermConst, App2, App3):
    _cls.__hash__ = _Node.__hash__

OpTerm = Union[TermVar, TermConst, App2, App3]


def children(t: OpTerm) -> tuple[OpTerm, ...]:
    if isinstance(t, App2):
        return (t.left, t.right)
    if isinstance(t, App3):
        return (t.first, t.second, t.third)
    return ()


def term_depth(t: OpTerm, memo: dict | None = None) -> int:
    """Application depth: variables and constants have depth 0."""
    memo = {} if memo is None else memo
    key = id(t)
    if key not in memo:
        args = children(t)
        memo[key] = (
            1 + max(term_depth(a, memo) for a in args) if args else 0
        )
    return memo[key]


def subterms(t: OpTerm) -> Iterator[OpTerm]:
    """Distinct subterms, each shared node visited once."""
    seen: set[int] = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        yield node
        stack.extend(children(node))


def term_size(t: OpTerm) -> int:
    return sum(1 for _ in subterms(t))


def term_codes(t: OpTerm) -> set[OpCode]:
    return {n.code for n in subterms(t) if isinstance(n, (App2, App3))}


def term_vars(t: OpTerm) -> set[str]:
    return {n.name for n in subterms(t) if isinstance(n, TermVar)}


def to_sexpr(t: OpTerm) -> str:
    if isinstance(t, TermVar):
        return f'(var {t.name})'
    if isinstance(t, TermConst):
        return f'(const {to_literal(t.value)})'
    args = ' '.join(to_sexpr(a) for a in children(t))
    return f'({t.code.value} {args})'


def from_sexpr(expr: SExpr) -> OpTerm:
    if not isinstance(expr, list) or not expr:
        raise TermSyntaxError(BAD_TERM_FORM)
    head, *args = expr
    if head == 'var' and len(args) == 1 and isinstance(args[0], str):
        return TermVar(args[0])
    if head == 'const' and len(args) == 1 and isinstance(args[0], HFSet):
        return TermConst(args[0])
    try:
        code = OpCode(head)
    except ValueError:
        raise TermSyntaxError(f'{UNKNOWN_OPCODE}: {head}')
    if len(args) != code.arity:
        raise TermSyntaxError(f'{ARITY_MISMATCH}: {head}')
    parsed = [from_sexpr(a) for a in args]
    if code.arity == 2:  # noqa: PLR2004
        return App2(code, *parsed)
    return App3(code, *parsed)


def parse_op_term(text: str) -> OpTerm:
    """
    Parses an s-expression such as `(pair (var x) (const {}))`.

    :return: OpTerm.
    """
    return from_sexpr(read_sexpr(text))


def var(name: str) -> TermVar:
    return TermVar(name)


def const(value: HFSet) -> TermConst:
    return TermConst(value)


def app(code: OpCode, *args: OpTerm) -> OpTerm:
    if code.arity == 2:  # noqa: PLR2004
        return App2(code, *args)
    return App3(code, *args)
