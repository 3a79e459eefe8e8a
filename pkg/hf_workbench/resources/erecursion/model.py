from dataclasses import dataclass
from typing import Iterator, Optional, Union

from hf_workbench.resources.erecursion.enums import (
    INDEX_ORDER,
    Index,
    OutcomeKind,
)
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import HFSet, as_natural


@dataclass(frozen=True)
class Idx:
    index: Index


@dataclass(frozen=True)
class WVar:
    name: str


@dataclass(frozen=True)
class WConst:
    value: HFSet


@dataclass(frozen=True)
class WApp:
    fn: 'WTerm'
    arg: 'WTerm'


WTerm = Union[Idx, WVar, WConst, WApp]


def subterms(t: WTerm) -> Iterator[WTerm]:
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, WApp):
            stack.extend((node.arg, node.fn))


def free_vars(t: WTerm) -> set[str]:
    return {n.name for n in subterms(t) if isinstance(n, WVar)}


def substitute(t: WTerm, env: dict[str, HFSet]) -> WTerm:
    match t:
        case WVar(name) if name in env:
            return WConst(env[name])
        case WApp(fn, arg):
            return WApp(substitute(fn, env), substitute(arg, env))
    return t


def apply_term(t: WTerm, *args: WTerm) -> WTerm:
    """t(a1, ..., an) as left-nested applications."""
    for a in args:
        t = WApp(t, a)
    return t


def index_of(x: HFSet) -> Optional[Index]:
    n = as_natural(x)
    if n is None or not 1 <= n <= len(INDEX_ORDER):
        return None
    return INDEX_ORDER[n - 1]


@dataclass(frozen=True)
class Value:
    value: HFSet

    kind = OutcomeKind.VALUE

    def describe(self) -> str:
        return to_literal(self.value)


@dataclass(frozen=True)
class Timeout:
    spent: int

    kind = OutcomeKind.TIMEOUT

    def describe(self) -> str:
        return f'timeout after {self.spent} steps'


@dataclass(frozen=True)
class NonFinitary:
    kind = OutcomeKind.NON_FINITARY

    def describe(self) -> str:
        return 'omega is not hereditarily finite'


@dataclass(frozen=True)
class ApplyError:
    detail: str

    kind = OutcomeKind.APPLY_ERROR

    def describe(self) -> str:
        return self.detail


Outcome = Union[Value, Timeout, NonFinitary, ApplyError]
