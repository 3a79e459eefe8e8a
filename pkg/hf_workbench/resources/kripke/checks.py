import logging
from typing import Optional, Sequence

from hf_workbench.resources.formula.model import Formula, free_vars
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.formula.printer import to_text
from hf_workbench.resources.hfset.literal import parse_literal
from hf_workbench.resources.hfset.model import is_transitive
from hf_workbench.resources.hfset.sampling import small_sets
from hf_workbench.resources.kripke.examples import (
    all_frames,
    decorations,
    forcing_corpus,
    from_transitive_set,
    two_node_example,
)
from hf_workbench.resources.kripke.forcing import (
    Forcing,
    assignments,
    check_persistence,
)
from hf_workbench.resources.oracle.evaluator import eval_formula
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.shared.schemas import Report

logger = logging.getLogger(__name__)


def check_counterexample() -> Report:
    """
    In the two-node model the root forces ¬¬(a = b) but not
    a = b ∨ ¬(a = b); the upper node forces a = b.
    """
    m = two_node_example()
    forcing = Forcing(m)
    root, top = m.frame.nodes
    assignment = {'a': 'a', 'b': 'b'}
    report = Report(name='kripke-counterexample')
    report.record(
        not forcing.forces(root, parse('a = b | ~a = b'), assignment),
        'root forces a = b | ~a = b',
    )
    report.record(
        forcing.forces(root, parse('~~a = b'), assignment),
        'root does not force ~~a = b',
    )
    report.record(
        forcing.forces(top, parse('a = b'), assignment),
        'upper node does not force a = b',
    )
    return report


def check_classical(
    formulas: Optional[Sequence[Formula]] = None, max_trcl: int = 3
) -> Report:
    """One-node models ⟨M, ∈⟩ force exactly what is true in M."""
    formulas = forcing_corpus() if formulas is None else formulas
    report = Report(name='kripke-classical')
    for M in small_sets(max_trcl):
        if not is_transitive(M):
            continue
        m = from_transitive_set(M)
        forcing = Forcing(m)
        (node,) = m.frame.nodes
        for phi in formulas:
            for assignment in assignments(m, node, free_vars(phi)):
                values = {k: parse_literal(v) for k, v in assignment.items()}
                report.record(
                    forcing.forces(node, phi, assignment)
                    == eval_formula(phi, Env(values, M)),
                    f'{to_text(phi)} in {M}',
                )
    return report


def check_frame_persistence(
    max_nodes: int = 4, formulas: Optional[Sequence[Formula]] = None
) -> Report:
    """Persistence over every decorated preorder frame up to a size."""
    formulas = forcing_corpus() if formulas is None else formulas
    report = Report(name='kripke-frames')
    frames = 0
    for frame in all_frames(max_nodes):
        frames += 1
        for m in decorations(frame):
            report.merge(check_persistence(m, formulas))
    logger.info('persistence checked on %d frames', frames)
    report.details = {'frames': frames}
    return report
