"""
Fuel-bounded evaluator for the E-recursive application relation and its
powerset extension.

Application states are left-nested pairs: applying an index of arity n
to x₁ yields ⟨e, x₁⟩, applying that to x₂ yields ⟨⟨e, x₁⟩, x₂⟩, and the
n-th argument discharges the index's clause. Evaluation runs on an
explicit task stack, so deep or divergent computations never touch the
host recursion limit.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from hf_workbench.resources.erecursion.enums import Index
from hf_workbench.resources.erecursion.model import (
    ApplyError,
    Idx,
    NonFinitary,
    Outcome,
    Timeout,
    Value,
    WApp,
    WConst,
    WTerm,
    WVar,
    apply_term,
    index_of,
)
from hf_workbench.resources.erecursion.schemas import (
    FREE_VARIABLE,
    FUEL_REQUIRED,
    NOT_A_NUMERAL,
    NOT_A_PAIR,
    NOT_APPLICABLE,
    POWERSET_MODE,
    TOO_MANY_ARGUMENTS,
)
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import (
    EMPTY,
    HFSet,
    as_natural,
    as_pair,
    hf,
    numeral,
    pair,
    subsets,
    union_all,
)
from hf_workbench.settings import get_settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Call:
    fn: HFSet
    arg: HFSet


@dataclass(frozen=True)
class Eval:
    term: WTerm


@dataclass(frozen=True)
class ApplyTop:
    """Pops the argument, then the function, and applies."""


@dataclass(frozen=True)
class Collect:
    count: int


Task = Union[Call, Eval, ApplyTop, Collect]
Step = Union[HFSet, Outcome, None]


def numerals(*xs: HFSet) -> Optional[list[int]]:
    found = [as_natural(x) for x in xs]
    return None if None in found else found


class Machine:
    def __init__(self, fuel: Optional[int] = None, pmode: bool = False):
        fuel = get_settings().FUEL if fuel is None else fuel
        if fuel <= 0:
            raise ValueError(FUEL_REQUIRED)
        self.fuel = fuel
        self.pmode = pmode
        self.spent = 0

    def charge(self, units: int = 1) -> bool:
        if self.spent + units > self.fuel:
            self.spent = self.fuel
            return False
        self.spent += units
        return True

    def run(self, tasks: list[Task]) -> Outcome:
        values: list[HFSet] = []
        while tasks:
            match tasks.pop():
                case Eval(Idx(index)):
                    values.append(index.code)
                case Eval(WConst(value)):
                    values.append(value)
                case Eval(WVar(name)):
                    return ApplyError(f'{FREE_VARIABLE}: {name}')
                case Eval(WApp(fn, arg)):
                    tasks.extend((ApplyTop(), Eval(arg), Eval(fn)))
                case ApplyTop():
                    arg, fn = values.pop(), values.pop()
                    tasks.append(Call(fn, arg))
                case Collect(count):
                    start = len(values) - count
                    collected = HFSet.of(values[start:])
                    del values[start:]
                    values.append(collected)
                case Call(fn, arg):
                    if not self.charge():
                        logger.debug('fuel exhausted at %d', self.spent)
                        return Timeout(self.spent)
                    result = self.step(fn, arg, tasks)
                    if isinstance(result, HFSet):
                        values.append(result)
                    elif result is not None:
                        return result
        return Value(values.pop())

    def step(self, fn: HFSet, arg: HFSet, tasks: list[Task]) -> Step:
        """
        Walks first components of ⟨⟨e, x₁⟩, x₂⟩ down to the index. States
        nest to the left so that a pair argument ⟨e, ⟨x₁, x₂⟩⟩ stays one
        argument.
        """
        args = [arg]
        head = fn
        while (index := index_of(head)) is None:
            found = as_pair(head)
            if found is None:
                return ApplyError(f'{NOT_APPLICABLE}: {to_literal(fn)}')
            head, earlier = found
            args.append(earlier)
        if len(args) > index.arity:
            return ApplyError(f'{TOO_MANY_ARGUMENTS}: {index.value}')
        if len(args) < index.arity:
            return pair(fn, arg)
        args.reverse()
        return self.clause(index, args, tasks)

    def clause(
        self, index: Index, args: list[HFSet], tasks: list[Task]
    ) -> Step:
        match index, args:
            case Index.K, [x, _]:
                return x
            case Index.S, [x, y, z]:
                tasks.extend((ApplyTop(), Call(y, z), Call(x, z)))
                return None
            case Index.P, [x, y]:
                return pair(x, y)
            case (Index.P0 | Index.P1), [x]:
                found = as_pair(x)
                if found is None:
                    return ApplyError(NOT_A_PAIR)
                return found[0] if index == Index.P0 else found[1]
            case Index.SN, [x]:
                n = as_natural(x)
                if n is None:
                    return ApplyError(f'{NOT_A_NUMERAL}: {index.value}')
                return numeral(n + 1)
            case Index.PN, [x]:
                n = as_natural(x)
                if n is None:
                    return ApplyError(f'{NOT_A_NUMERAL}: {index.value}')
                return numeral(max(n - 1, 0))
            case Index.DN, [n, m, x, y]:
                if numerals(n, m) is None:
                    return ApplyError(f'{NOT_A_NUMERAL}: {index.value}')
                return x if n is m else y
            case Index.ZERO, [_]:
                return EMPTY
            case Index.OMEGA, [_]:
                return NonFinitary()
            case Index.PI, [x, y]:
                return hf(x, y)
            case Index.NU, [x]:
                return union_all(x)
            case Index.GAMMA, [x, y]:
                return HFSet.of(u for u in x if all(u in v for v in y))
            case Index.RHO, [x, y]:
                tasks.append(Collect(len(y)))
                tasks.extend(Call(x, u) for u in reversed(y.ordered()))
                return None
            case Index.I1, [x, y, z]:
                return x if y in z else EMPTY
            case Index.I2, [x, y, z]:
                return HFSet.of(u for u in x if u not in y or u in z)
            case Index.I3, [x, y, z]:
                return HFSet.of(u for u in x if u not in y or z in u)
            case Index.POW, [x]:
                if not self.pmode:
                    return ApplyError(POWERSET_MODE)
                # one unit per subset built
                if not self.charge((1 << len(x)) - 1):
                    return Timeout(self.spent)
                return HFSet.of(subsets(x))
        raise TypeError(f'Unknown index {index!r}')


def apply(
    e: HFSet,
    x: HFSet,
    fuel: Optional[int] = None,
    pmode: bool = False,
) -> Outcome:
    """
    [e](x) within `fuel` clause discharges.

    :return: Outcome.
    """
    return Machine(fuel, pmode).run([Call(e, x)])


def apply_all(
    e: HFSet,
    args: Sequence[HFSet],
    fuel: Optional[int] = None,
    pmode: bool = False,
) -> Outcome:
    """[e](x₁, …, xₙ), every application sharing one fuel budget."""
    term = apply_term(WConst(e), *(WConst(x) for x in args))
    return Machine(fuel, pmode).run([Eval(term)])


def eval_closed_term(
    t: WTerm, fuel: Optional[int] = None, pmode: bool = False
) -> Outcome:
    """
    Left-to-right evaluation of nested applications; an undefined
    subterm makes the whole term undefined.

    :return: Outcome.
    """
    return Machine(fuel, pmode).run([Eval(t)])
