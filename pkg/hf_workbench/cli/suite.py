"""
The acceptance batteries. Each one merges the property checks of a
resource into a single Report; batteries run in a fixed order so the
merged results are keyed deterministically.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Iterable

from hf_workbench.cli.enums import Battery
from hf_workbench.resources.compiler.checks import (
    check_equivalence,
    check_separation_terms,
)
from hf_workbench.resources.erecursion.checks import (
    FUEL_LADDER,
    check_combinators,
    check_divergence,
    check_fuel_monotonicity,
    check_identity,
    check_separation,
    check_set_clauses,
)
from hf_workbench.resources.fullmodel.checks import (
    check_canonical,
    check_delta,
    check_lem,
    check_name_persistence,
    check_one_p,
    check_star,
)
from hf_workbench.resources.hierarchy.checks import (
    check_alpha_star,
    check_comparison,
    check_stage_properties,
    check_witness_chains,
)
from hf_workbench.resources.hierarchy.closure import HierarchyBuilder
from hf_workbench.resources.kripke.checks import (
    check_classical,
    check_counterexample,
    check_frame_persistence,
)
from hf_workbench.resources.kripke.examples import chains
from hf_workbench.resources.realizability.audit import (
    check_budget_monotonicity,
    check_variant_containment,
    truth_audit,
)
from hf_workbench.resources.realizability.checker import check_wt
from hf_workbench.resources.realizability.corpus import stock_corpus
from hf_workbench.resources.shared.schemas import Budget, Report

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Scale:
    samples: int
    separation_samples: int
    max_alpha: int
    witness_n: int
    alphas: tuple[int, ...]
    comparison_trcl: int
    classical_trcl: int
    frame_nodes: int
    star_n: int
    canonical_n: int
    name_nodes: int
    name_cutoff: int
    delta_len: int
    vm_trcl: int
    clause_trcl: int
    vm_samples: int
    divergence_fuel: int
    fuel_ladder: tuple[int, ...]


ACCEPTANCE = Scale(
    samples=20,
    separation_samples=5,
    max_alpha=4,
    witness_n=8,
    alphas=(0, 1, 2, 3),
    comparison_trcl=3,
    classical_trcl=3,
    frame_nodes=4,
    star_n=3,
    canonical_n=4,
    name_nodes=3,
    name_cutoff=2,
    delta_len=4,
    vm_trcl=3,
    clause_trcl=2,
    vm_samples=20,
    divergence_fuel=100_000,
    fuel_ladder=FUEL_LADDER,
)

QUICK = Scale(
    samples=5,
    separation_samples=2,
    max_alpha=2,
    witness_n=4,
    alphas=(0, 1, 2),
    comparison_trcl=2,
    classical_trcl=2,
    frame_nodes=3,
    star_n=2,
    canonical_n=2,
    name_nodes=2,
    name_cutoff=1,
    delta_len=3,
    vm_trcl=2,
    clause_trcl=1,
    vm_samples=5,
    divergence_fuel=1_000,
    fuel_ladder=(1, 8, 64, 512),
)


def combined(name: str, reports: Iterable[Report]) -> Report:
    """One report whose details are keyed by the merged reports' names."""
    report = Report(name=name)
    for part in reports:
        report.merge(part)
        report.details[part.name] = part.details
    return report


def compiler_battery(scale: Scale, budget: Budget) -> Report:
    return check_equivalence(samples=scale.samples, seed=budget.seed)


def separation_battery(scale: Scale, budget: Budget) -> Report:
    return check_separation_terms(
        samples=scale.separation_samples, seed=budget.seed
    )


def hierarchy_battery(scale: Scale, budget: Budget) -> Report:
    builder = HierarchyBuilder(budget)
    return combined(
        Battery.HIERARCHY.value,
        [
            check_stage_properties(scale.max_alpha, builder),
            check_witness_chains(scale.witness_n, builder),
        ],
    )


def alpha_star_battery(scale: Scale, budget: Budget) -> Report:
    return check_alpha_star(scale.alphas, HierarchyBuilder(budget))


def comparison_battery(scale: Scale, budget: Budget) -> Report:
    return check_comparison(
        scale.comparison_trcl, builder=HierarchyBuilder(budget)
    )


def kripke_battery(scale: Scale, budget: Budget) -> Report:
    return combined(
        Battery.KRIPKE.value,
        [
            check_counterexample(),
            check_classical(max_trcl=scale.classical_trcl),
            check_frame_persistence(scale.frame_nodes),
        ],
    )


def full_model_battery(scale: Scale, budget: Budget) -> Report:
    frame = chains(2)
    return combined(
        Battery.FULL_MODEL.value,
        [
            check_one_p(frame),
            check_star(frame, scale.star_n),
            check_lem(frame),
            check_canonical(frame, scale.canonical_n),
            check_name_persistence(scale.name_nodes, scale.name_cutoff),
        ],
    )


def delta_battery(scale: Scale, budget: Budget) -> Report:
    return check_delta(scale.delta_len)


def vm_battery(scale: Scale, budget: Budget) -> Report:
    return combined(
        Battery.VM.value,
        [
            check_combinators(scale.vm_trcl),
            check_identity(scale.vm_samples, budget.seed),
            check_set_clauses(scale.clause_trcl),
            check_divergence(scale.divergence_fuel),
            check_fuel_monotonicity(scale.fuel_ladder),
            check_separation(seed=budget.seed),
        ],
    )


def realizability_battery(scale: Scale, budget: Budget) -> Report:
    corpus = stock_corpus()
    return combined(
        Battery.REALIZABILITY.value,
        [
            truth_audit(corpus, check_wt),
            check_variant_containment(corpus),
            check_budget_monotonicity(corpus),
        ],
    )


BATTERIES: dict[Battery, Callable[[Scale, Budget], Report]] = {
    Battery.COMPILER: compiler_battery,
    Battery.SEPARATION: separation_battery,
    Battery.HIERARCHY: hierarchy_battery,
    Battery.ALPHA_STAR: alpha_star_battery,
    Battery.COMPARISON: comparison_battery,
    Battery.KRIPKE: kripke_battery,
    Battery.FULL_MODEL: full_model_battery,
    Battery.DELTA: delta_battery,
    Battery.VM: vm_battery,
    Battery.REALIZABILITY: realizability_battery,
}


def run_suite(
    batteries: Iterable[Battery], scale: Scale, budget: Budget
) -> dict[str, Report]:
    """
    Runs the selected batteries in their declared order.

    :return: dict from battery name to its merged Report.
    """
    selected = set(batteries)
    reports = {}
    for battery in Battery:
        if battery not in selected:
            continue
        logger.info('battery %s started', battery.value)
        report = BATTERIES[battery](scale, budget)
        logger.info(
            'battery %s: %d checked, %d violations',
            battery.value,
            report.checked,
            len(report.violations),
        )
        reports[battery.value] = report
    return reports
