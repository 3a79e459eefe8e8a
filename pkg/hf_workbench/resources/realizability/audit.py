import logging
from typing import Callable, Iterable

from hf_workbench.resources.formula.analysis import is_bounded
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.oracle.evaluator import eval_formula
from hf_workbench.resources.realizability.checker import (
    check_w,
    check_wt,
    search_universe,
)
from hf_workbench.resources.realizability.corpus import Triple
from hf_workbench.resources.realizability.enums import Variant
from hf_workbench.resources.realizability.model import Verdict
from hf_workbench.resources.realizability.schemas import (
    AUDIT_NEEDS_BOUNDED,
    SURROGATE,
    AuditEntry,
)
from hf_workbench.resources.shared.errors import NotSigma0
from hf_workbench.resources.shared.schemas import Report

logger = logging.getLogger(__name__)

Checker = Callable[..., Verdict]


def to_entry(triple: Triple, verdict: Verdict, truth: bool) -> AuditEntry:
    return AuditEntry(
        realizer=to_literal(triple.realizer),
        formula=triple.text,
        env={k: to_literal(v) for k, v in triple.assignment.items()},
        verdict=verdict.kind,
        truth=truth,
    )


def truth_audit(
    corpus: Iterable[Triple], checker: Checker = check_wt, **budget
) -> Report:
    """
    Realized must imply classical truth. Every triple is listed with
    its verdict; a Realized-but-false triple is a violation.

    :return: Report.
    """
    report = Report(name='truth-audit')
    entries = []
    for triple in corpus:
        phi = triple.formula
        if not is_bounded(phi):
            raise NotSigma0(f'{AUDIT_NEEDS_BOUNDED}: {triple.text}')
        verdict = checker(triple.realizer, phi, triple.env, **budget)
        truth = eval_formula(phi, triple.env)
        report.record(
            not verdict.realized or truth,
            f'{to_literal(triple.realizer)} realizes false {triple.text}',
        )
        entries.append(to_entry(triple, verdict, truth).model_dump())
    logger.info('audited %d triples', len(entries))
    report.details = {'interpretation': SURROGATE, 'entries': entries}
    return report


def check_variant_containment(corpus: Iterable[Triple], **budget) -> Report:
    """Whatever ⊩wt realizes, ⊩w realizes at the same budget."""
    report = Report(name='wt-within-w')
    for triple in corpus:
        phi, env = triple.formula, triple.env
        if check_wt(triple.realizer, phi, env, **budget).realized:
            report.record(
                check_w(triple.realizer, phi, env, **budget).realized,
                f'{Variant.W.value} rejects {triple.text}',
            )
    return report


def check_budget_monotonicity(
    corpus: Iterable[Triple],
    checker: Checker = check_wt,
    fuel: int = 1_000,
    search_rank: int = 2,
    factor: int = 10,
) -> Report:
    """Growing fuel and search never swaps Realized and NotRealized."""
    report = Report(name='budget-monotonicity')
    small = search_universe(search_rank)
    large = search_universe(search_rank + 1)
    for triple in corpus:
        phi, env = triple.formula, triple.env
        before = checker(triple.realizer, phi, env, fuel, small)
        after = checker(triple.realizer, phi, env, fuel * factor, large)
        if before.unknown:
            continue
        report.record(
            after == before, f'{triple.text}: {before.kind} to {after.kind}'
        )
    return report
