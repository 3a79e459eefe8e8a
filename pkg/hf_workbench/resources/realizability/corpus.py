"""Stock (realizer, formula, assignment) triples over bounded formulas."""

from dataclasses import dataclass, field
from typing import Mapping

from hf_workbench.resources.erecursion.catalog import (
    identity_value,
    singleton_family_term,
    subset_family_term,
)
from hf_workbench.resources.erecursion.enums import Index
from hf_workbench.resources.erecursion.machine import eval_closed_term
from hf_workbench.resources.erecursion.model import Value, WTerm
from hf_workbench.resources.formula.model import Formula
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.hfset.model import HFSet, hf, numeral, pair
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.realizability.enums import VerdictKind
from hf_workbench.resources.realizability.schemas import TERM_UNDEFINED

R = VerdictKind.REALIZED
N = VerdictKind.NOT_REALIZED
U = VerdictKind.UNKNOWN


@dataclass(frozen=True)
class Triple:
    realizer: HFSet
    text: str
    assignment: Mapping[str, HFSet] = field(default_factory=dict)
    expected: VerdictKind = R

    @property
    def formula(self) -> Formula:
        return parse(self.text)

    @property
    def env(self) -> Env:
        return Env(dict(self.assignment))


def term_value(t: WTerm, pmode: bool = False) -> HFSet:
    outcome = eval_closed_term(t, pmode=pmode)
    if not isinstance(outcome, Value):
        raise ValueError(f'{TERM_UNDEFINED}: {outcome.describe()}')
    return outcome.value


def constant(x: HFSet) -> HFSet:
    """The application state ⟨k, x⟩, which maps everything to x."""
    return pair(Index.K.code, x)


def stock_corpus() -> list[Triple]:
    n0, n1, n2 = numeral(0), numeral(1), numeral(2)
    identity = identity_value()
    left = hf(pair(n0, n0))
    right = hf(pair(n1, n0))
    return [
        Triple(n0, '0 in 1'),
        Triple(n0, '1 in 0', expected=N),
        Triple(n0, '0 = 0'),
        Triple(n0, 'false', expected=N),
        Triple(pair(n0, n0), '0 in 1 & 1 in 2'),
        Triple(n0, '0 in 1 & 1 in 2', expected=N),
        Triple(pair(n0, n0), '0 in 1 & 1 in 1', expected=N),
        Triple(left, '0 in 1 | 1 in 0'),
        Triple(right, '0 in 1 | 1 in 0', expected=N),
        Triple(n0, '0 in 1 | 1 in 0', expected=N),
        Triple(hf(pair(n2, n0)), '0 in 1 | 1 in 0', expected=N),
        Triple(left, 'some x in 1. x = x'),
        Triple(n0, 'some x in 1. x = x', expected=N),
        Triple(right, 'some x in 1. x = x', expected=N),
        Triple(identity, 'all x in 2. x in 3'),
        Triple(n0, 'all x in 2. x in 3', expected=N),
        Triple(n0, 'all x in 0. x in x'),
        Triple(n0, '~0 in 0'),
        Triple(n0, '~0 in 1', expected=N),
        Triple(n0, '~~0 in 1'),
        Triple(n0, '1 in 0 -> 0 in 0'),
        Triple(n0, '0 in 1 -> 0 in 2', expected=N),
        Triple(constant(n0), '0 in 1 -> 0 in 2', expected=U),
        Triple(n0, 'x in y', {'x': n0, 'y': n1}),
        Triple(n0, 'x in y', {'x': n1, 'y': n1}, expected=N),
        Triple(left, 'some x in y. x in z', {'y': n2, 'z': n1}),
        Triple(
            right, 'some x in y. x in z', {'y': n2, 'z': n1}, expected=N
        ),
        Triple(
            constant(hf(pair(n2, n0))), 'all x in 2. some z in 3. x in z'
        ),
        Triple(
            term_value(singleton_family_term()),
            'all x in 2. some y sub x. y = y',
        ),
        Triple(
            term_value(subset_family_term()),
            'all x in 2. some y sub x. y = y',
            expected=N,
        ),
        Triple(n0, 'some y sub 1. 0 in y', expected=N),
        Triple(hf(pair(n1, n0)), 'some y sub 1. 0 in y'),
        Triple(identity, 'all y sub 1. y in 2'),
        Triple(identity, 'all y sub 2. y in 2', expected=N),
        Triple(
            pair(left, identity), '(0 in 1 | 0 in 0) & all x in 1. x in 1'
        ),
    ]
