import logging
from typing import Iterable, Optional

from hf_workbench.resources.compiler.compiler import (
    compile_separation,
    compile_term,
)
from hf_workbench.resources.compiler.corpus import CORPUS, CorpusEntry
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import HFSet
from hf_workbench.resources.hfset.sampling import random_hfsets
from hf_workbench.resources.operations.evaluator import eval_term
from hf_workbench.resources.oracle.evaluator import (
    comprehension,
    eval_formula,
)
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.shared.schemas import Report
from hf_workbench.settings import get_settings
from hf_workbench.utils import get_rng

logger = logging.getLogger(__name__)


def check_equivalence(
    corpus: Iterable[CorpusEntry] = CORPUS,
    samples: int = 20,
    max_trcl: int = 5,
    seed: Optional[int] = None,
) -> Report:
    """Compiled comprehension terms agree with brute force."""
    rng = get_rng(get_settings().SEED if seed is None else seed)
    report = Report(name='compiler-oracle')
    for item in corpus:
        phi = item.formula
        term = compile_term(phi, item.vars)
        for _ in range(samples):
            args = random_hfsets(rng, len(item.vars), max_trcl)
            env = dict(zip(item.vars, args))
            report.record(
                eval_term(term, env)
                is comprehension(phi, item.vars, args),
                f'{item.name} on {[to_literal(a) for a in args]}',
            )
    return report


def check_separation_terms(
    corpus: Iterable[CorpusEntry] = CORPUS,
    samples: int = 5,
    max_trcl: int = 4,
    seed: Optional[int] = None,
) -> Report:
    """The term for each argument position returns {x_i ∈ a | φ}."""
    rng = get_rng(get_settings().SEED if seed is None else seed)
    report = Report(name='separation-form')
    for item in corpus:
        phi = item.formula
        for i, separated in enumerate(item.vars, start=1):
            result = compile_separation(phi, i, item.vars)
            for _ in range(samples):
                values = random_hfsets(rng, len(item.vars) + 1, max_trcl)
                *others, a = values
                env: dict[str, HFSet] = dict(zip(item.vars, others))
                del env[separated]
                expected = HFSet.of(
                    u
                    for u in a
                    if eval_formula(phi, Env({**env, separated: u}))
                )
                env[result.parameter] = a
                report.record(
                    eval_term(result.term, env) is expected,
                    f'{item.name} at position {i}',
                )
    return report
