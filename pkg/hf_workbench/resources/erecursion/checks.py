import itertools
import logging
from typing import Optional

from hf_workbench.resources.erecursion.catalog import (
    identity_term,
    identity_value,
    omega_term,
    separation_formula,
    separation_term,
    vm_corpus,
)
from hf_workbench.resources.erecursion.enums import Index, OutcomeKind
from hf_workbench.resources.erecursion.machine import (
    apply,
    apply_all,
    eval_closed_term,
)
from hf_workbench.resources.erecursion.model import (
    Outcome,
    Value,
    WApp,
    WConst,
    apply_term,
)
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import (
    EMPTY,
    HFSet,
    as_natural,
    hf,
    numeral,
    pair,
    powerset,
    union_all,
)
from hf_workbench.resources.hfset.sampling import random_hfsets, small_sets
from hf_workbench.resources.oracle.evaluator import eval_formula
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.shared.schemas import Report
from hf_workbench.settings import get_settings
from hf_workbench.utils import get_rng

logger = logging.getLogger(__name__)

CHECK_FUEL = 1_000
DIVERGENCE_FUEL = 100_000
FUEL_LADDER = (1, 2, 4, 8, 16, 32, 64, 128, 256, 1024)


def composed(x: HFSet, y: HFSet, z: HFSet, fuel: int) -> Outcome:
    """[[x](z)]([y](z)) evaluated step by step."""
    first = apply(x, z, fuel)
    if not isinstance(first, Value):
        return first
    second = apply(y, z, fuel)
    if not isinstance(second, Value):
        return second
    return apply(first.value, second.value, fuel)


def check_combinators(max_trcl: int = 3, fuel: int = CHECK_FUEL) -> Report:
    """
    k, s, pairing, projection and numeral clauses over every HF argument
    whose transitive closure has at most `max_trcl` members.
    """
    report = Report(name='combinator-laws')
    pool = small_sets(max_trcl)
    k, s, p = Index.K.code, Index.S.code, Index.P.code
    for x, y in itertools.product(pool, repeat=2):
        report.record(
            apply_all(k, [x, y], fuel) == Value(x),
            f'k({to_literal(x)}, {to_literal(y)})',
        )
        report.record(
            apply_all(p, [x, y], fuel) == Value(pair(x, y)),
            f'p({to_literal(x)}, {to_literal(y)})',
        )
        for side, expected in ((Index.P0, x), (Index.P1, y)):
            report.record(
                apply(side.code, pair(x, y), fuel) == Value(expected),
                f'{side.value} of <{to_literal(x)}, {to_literal(y)}>',
            )
        for z in pool:
            report.record(
                apply_all(s, [x, y, z], fuel) == composed(x, y, z, fuel),
                f's({to_literal(x)}, {to_literal(y)}, {to_literal(z)})',
            )
    for x in pool:
        n = as_natural(x)
        successor = apply(Index.SN.code, x, fuel)
        predecessor = apply(Index.PN.code, x, fuel)
        if n is None:
            report.record(
                successor.kind == OutcomeKind.APPLY_ERROR,
                f'sN defined on {to_literal(x)}',
            )
            report.record(
                predecessor.kind == OutcomeKind.APPLY_ERROR,
                f'pN defined on {to_literal(x)}',
            )
            continue
        report.record(successor == Value(numeral(n + 1)), f'sN({n})')
        report.record(
            predecessor == Value(numeral(max(n - 1, 0))), f'pN({n})'
        )
    naturals = [x for x in pool if as_natural(x) is not None]
    for n, m, x, y in itertools.product(naturals, naturals, pool, pool):
        report.record(
            apply_all(Index.DN.code, [n, m, x, y], fuel)
            == Value(x if n is m else y),
            f'dN({to_literal(n)}, {to_literal(m)})',
        )
    return report


def check_identity(samples: int = 20, seed: Optional[int] = None) -> Report:
    """S K K maps every argument to itself, as a term and as a value."""
    report = Report(name='skk-identity')
    seed = get_settings().SEED if seed is None else seed
    value = eval_closed_term(identity_term())
    report.record(value == Value(identity_value()), 'S K K state')
    for x in random_hfsets(get_rng(seed), samples, max_trcl=5):
        report.record(apply(identity_value(), x) == Value(x), to_literal(x))
        report.record(
            eval_closed_term(WApp(identity_term(), WConst(x))) == Value(x),
            f'term on {to_literal(x)}',
        )
    return report


def set_clause_expectations(
    pool: list[HFSet],
) -> list[tuple[Index, list[HFSet], HFSet]]:
    expected = []
    for x, y in itertools.product(pool, repeat=2):
        expected.append((Index.PI, [x, y], hf(x, y)))
        expected.append(
            (
                Index.GAMMA,
                [x, y],
                HFSet.of(u for u in x if all(u in v for v in y)),
            )
        )
        for z in pool:
            expected.append((Index.I1, [x, y, z], x if y in z else EMPTY))
            expected.append(
                (
                    Index.I2,
                    [x, y, z],
                    HFSet.of(u for u in x if u not in y or u in z),
                )
            )
            expected.append(
                (
                    Index.I3,
                    [x, y, z],
                    HFSet.of(u for u in x if u not in y or z in u),
                )
            )
    for x in pool:
        expected.append((Index.NU, [x], union_all(x)))
        expected.append((Index.ZERO, [x], EMPTY))
    return expected


def check_set_clauses(max_trcl: int = 2, fuel: int = CHECK_FUEL) -> Report:
    """
    π, ν, γ, i₁, i₂, i₃, ρ and ℘̄ against direct set computations; every
    clause except ℘̄ agrees between the two modes.
    """
    report = Report(name='set-clauses')
    pool = small_sets(max_trcl)
    for index, args, value in set_clause_expectations(pool):
        for pmode in (False, True):
            report.record(
                apply_all(index.code, args, fuel, pmode) == Value(value),
                f'{index.value}{tuple(to_literal(a) for a in args)}',
            )
    naturals = [x for x in pool if as_natural(x) is not None]
    for size in range(len(naturals) + 1):
        for chosen in itertools.combinations(naturals, size):
            y = HFSet.of(chosen)
            image = HFSet.of(numeral(as_natural(n) + 1) for n in chosen)
            report.record(
                apply_all(Index.RHO.code, [Index.SN.code, y], fuel)
                == Value(image),
                f'rho(sN, {to_literal(y)})',
            )
    partial = hf(EMPTY, hf(numeral(1)))
    report.record(
        apply_all(Index.RHO.code, [Index.SN.code, partial]).kind
        == OutcomeKind.APPLY_ERROR,
        'rho defined with an undefined member',
    )
    for x in pool:
        report.record(
            apply(Index.POW.code, x, fuel, pmode=True)
            == Value(powerset(x)),
            f'pow({to_literal(x)})',
        )
        report.record(
            apply(Index.POW.code, x, fuel).kind == OutcomeKind.APPLY_ERROR,
            f'pow({to_literal(x)}) defined outside powerset mode',
        )
    report.record(
        apply(Index.OMEGA.code, EMPTY).kind == OutcomeKind.NON_FINITARY,
        'omega returned a hereditarily finite value',
    )
    return report


def check_divergence(fuel: int = DIVERGENCE_FUEL) -> Report:
    report = Report(name='divergence')
    for budget in (1, 10, 100, fuel):
        outcome = eval_closed_term(omega_term(), budget)
        report.record(
            outcome.kind == OutcomeKind.TIMEOUT,
            f'self-application halted at fuel {budget}',
        )
    return report


def check_fuel_monotonicity(ladder: tuple[int, ...] = FUEL_LADDER) -> Report:
    """
    Along increasing fuel a Value never changes and never turns back into
    a Timeout; other outcomes are stable once reached.
    """
    report = Report(name='fuel-monotonicity')
    for name, (term, pmode) in vm_corpus().items():
        settled: Optional[Outcome] = None
        for fuel in ladder:
            outcome = eval_closed_term(term, fuel, pmode)
            if settled is not None:
                report.record(outcome == settled, f'{name} at fuel {fuel}')
            elif outcome.kind != OutcomeKind.TIMEOUT:
                settled = outcome
        logger.debug('%s settled as %s', name, settled)
    return report


def check_separation(samples: int = 10, seed: Optional[int] = None) -> Report:
    """The hand-built separation term agrees with the oracle."""
    report = Report(name='separation-term')
    phi = separation_formula()
    rng = get_rng(get_settings().SEED if seed is None else seed)
    for _ in range(samples):
        a, b = random_hfsets(rng, 2, max_trcl=4)
        expected = HFSet.of(
            u for u in b if eval_formula(phi, Env({'a': a, 'u': u}))
        )
        outcome = eval_closed_term(
            apply_term(separation_term(), WConst(a), WConst(b))
        )
        report.record(
            outcome == Value(expected),
            f'separation on {to_literal(a)}, {to_literal(b)}',
        )
    return report
