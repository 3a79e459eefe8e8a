"""
The `hfw` command line. Global budget flags live on the meta app and
apply to whichever subcommand follows; every command writes one
RunReport and returns its exit code.
"""

import logging
import sys
from pathlib import Path
from typing import Annotated, Optional, Sequence

from cyclopts import App, Parameter
from cyclopts.exceptions import CycloptsError
from rich.console import Console
from rich.logging import RichHandler

from hf_workbench.cli.enums import Battery, ExitCode, OutputFormat
from hf_workbench.cli.report import (
    emit,
    get_session,
    open_session,
    reported,
)
from hf_workbench.cli.schemas import (
    BAD_BINDING,
    BAD_SEARCH_RANK,
    EMPTY_VARIABLES,
    MAX_SEARCH_RANK,
    MEMBERS_SHOWN,
)
from hf_workbench.cli.suite import ACCEPTANCE, QUICK, run_suite
from hf_workbench.resources.compiler.compiler import (
    compile_comprehension,
    compile_separation,
)
from hf_workbench.resources.compiler.controller import to_compilation_out
from hf_workbench.resources.erecursion.machine import (
    apply_all,
    eval_closed_term,
)
from hf_workbench.resources.erecursion.model import free_vars, substitute
from hf_workbench.resources.erecursion.parser import parse_wterm
from hf_workbench.resources.erecursion.repository import (
    dump_index_table,
    index_table,
    load_term,
    to_outcome_out,
)
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.formula.printer import to_text
from hf_workbench.resources.fullmodel.checks import PROPERTY_CHECKS
from hf_workbench.resources.fullmodel.coding import (
    delta_decode,
    delta_encode,
)
from hf_workbench.resources.fullmodel.enums import NameProperty
from hf_workbench.resources.fullmodel.names import one_p
from hf_workbench.resources.fullmodel.schemas import INVALID_BITS, FrameFile
from hf_workbench.resources.fullmodel.universe import build_universe
from hf_workbench.resources.hfset.literal import parse_literal, to_literal
from hf_workbench.resources.hfset.model import HFSet, numeral
from hf_workbench.resources.hfset.sampling import hfsets_of_rank
from hf_workbench.resources.hierarchy.closure import HierarchyBuilder
from hf_workbench.resources.hierarchy.definable import definable_witnesses
from hf_workbench.resources.hierarchy.stages import (
    alpha_star,
    ll_membership_witness,
    verify_witness,
)
from hf_workbench.resources.kripke.checks import check_counterexample
from hf_workbench.resources.kripke.examples import chains, two_node_example
from hf_workbench.resources.kripke.forcing import Forcing
from hf_workbench.resources.kripke.model import Frame
from hf_workbench.resources.kripke.repository import load_model, to_file
from hf_workbench.resources.kripke.validate import require_valid, validate
from hf_workbench.resources.operations.evaluator import eval_term
from hf_workbench.resources.operations.model import parse_op_term
from hf_workbench.resources.oracle.evaluator import (
    comprehension,
    eval_formula,
)
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.realizability.audit import truth_audit
from hf_workbench.resources.realizability.checker import (
    CHECKERS,
    search_universe,
)
from hf_workbench.resources.realizability.corpus import (
    stock_corpus,
    term_value,
)
from hf_workbench.resources.realizability.enums import Variant
from hf_workbench.resources.realizability.schemas import SURROGATE
from hf_workbench.resources.shared.errors import UnboundVariable
from hf_workbench.resources.shared.schemas import Budget
from hf_workbench.settings import get_settings

logger = logging.getLogger(__name__)

app = App(
    name='hfw',
    help='Hereditarily finite workbench: compile, evaluate, build '
    'hierarchies, force, realize and run the acceptance suite.',
)

oracle_app = App(name='oracle', help='Brute-force classical truth.')
hier_app = App(name='hier', help='Constructible hierarchy stages.')
kripke_app = App(name='kripke', help='Kripke models and forcing.')
fullmodel_app = App(name='fullmodel', help='Names over a Kripke frame.')
erec_app = App(name='erec', help='The E-recursion machine.')
realize_app = App(name='realize', help='Realizability verdicts.')

for sub_app in (
    oracle_app,
    hier_app,
    kripke_app,
    fullmodel_app,
    erec_app,
    realize_app,
):
    app.command(sub_app)


def split_vars(text: str) -> list[str]:
    names = [name.strip() for name in text.split(',') if name.strip()]
    if not names:
        raise ValueError(EMPTY_VARIABLES)
    return names


def parse_bindings(pairs: Optional[Sequence[str]]) -> dict[str, str]:
    """
    `name=value` pairs as a dict; values are left as written.

    :return: dict from name to value text.
    """
    found = {}
    for pair in pairs or ():
        name, sep, value = pair.partition('=')
        if not sep or not name.strip():
            raise ValueError(f'{BAD_BINDING}: {pair}')
        found[name.strip()] = value.strip()
    return found


def parse_env(pairs: Optional[Sequence[str]]) -> dict[str, HFSet]:
    return {
        name: parse_literal(value)
        for name, value in parse_bindings(pairs).items()
    }


def read_set(path: Path) -> HFSet:
    return parse_literal(path.read_text().strip())


@app.command(name='compile')
@reported
def compile_formula(*, formula: str, vars: str) -> int:
    """
    Compile a Σ₀ formula into its comprehension term.

    Args:
        formula: Formula text.
        vars: Comma-separated variable order x1,..,xn.
    """
    result = compile_comprehension(parse(formula), split_vars(vars))
    return emit(
        to_compilation_out(result),
        inputs={'formula': formula, 'vars': vars},
    )


@app.command(name='sep')
@reported
def separation(*, formula: str, vars: str, position: int = 1) -> int:
    """
    Compile the separation term {x_i ∈ a | φ}.

    Args:
        formula: Formula text.
        vars: Comma-separated variable order x1,..,xn.
        position: The separated variable i, starting at 1.
    """
    result = compile_separation(parse(formula), position, split_vars(vars))
    return emit(
        to_compilation_out(result),
        inputs={'formula': formula, 'vars': vars, 'position': position},
    )


@app.command(name='eval-term')
@reported
def evaluate_term(*, term: str, env: Optional[list[str]] = None) -> int:
    """
    Evaluate an operation term.

    Args:
        term: Operation term as an s-expression.
        env: Variable bindings name=literal, repeatable.
    """
    value = eval_term(parse_op_term(term), parse_env(env))
    return emit({'value': value}, inputs={'term': term, 'env': env or []})


@oracle_app.command(name='eval')
@reported
def oracle_eval(
    *,
    formula: str,
    env: Optional[list[str]] = None,
    universe_rank: Optional[int] = None,
) -> int:
    """
    Classical truth of a formula.

    Args:
        formula: Formula text.
        env: Variable bindings name=literal, repeatable.
        universe_rank: Unbounded quantifiers range over V_rank.
    """
    phi = parse(formula)
    universe = None
    if universe_rank is not None:
        universe = HFSet.of(hfsets_of_rank(universe_rank))
    value = eval_formula(phi, Env(parse_env(env), universe))
    return emit(
        {'text': to_text(phi), 'value': value},
        inputs={
            'formula': formula,
            'env': env or [],
            'universe_rank': universe_rank,
        },
    )


@oracle_app.command(name='compr')
@reported
def oracle_comprehension(*, formula: str, vars: str, args: list[str]) -> int:
    """
    Brute-force comprehension set over the given argument sets.

    Args:
        formula: Formula text.
        vars: Comma-separated variable order x1,..,xn.
        args: One literal per variable, repeatable.
    """
    value = comprehension(
        parse(formula),
        split_vars(vars),
        [parse_literal(a) for a in args],
    )
    return emit(
        {'value': value, 'size': len(value)},
        inputs={'formula': formula, 'vars': vars, 'args': args},
    )


@hier_app.command(name='ll')
@reported
def hier_stage(*, alpha: int, aux: bool = False) -> int:
    """
    Build 𝕃_α by enumeration.

    Args:
        alpha: The stage index, a natural number.
        aux: Close under the auxiliary 𝓖 operations too.
    """
    builder = HierarchyBuilder(get_session().budget)
    stage = builder.ll_level(numeral(alpha), aux)
    results = {
        'alpha': alpha,
        'size': len(stage),
        'sizes': builder.stats.sizes,
        'members': list(stage) if len(stage) <= MEMBERS_SHOWN else None,
    }
    return emit(results, inputs={'alpha': alpha, 'aux': aux})


@hier_app.command(name='defclose')
@reported
def hier_def_closure(
    *, set_file: Annotated[Path, Parameter(name='--set')], n: int
) -> int:
    """
    Truncations 𝒟⁰(b)..𝒟ⁿ(b) of Def(b).

    Args:
        set_file: File holding the literal b.
        n: Number of closure steps.
    """
    b = read_set(set_file)
    levels = HierarchyBuilder(get_session().budget).def_truncated(b, n)
    results = {
        'sizes': [len(level) for level in levels],
        'definable_subsets': [x for x in levels[-1] if x <= b],
    }
    return emit(results, inputs={'set': to_literal(b), 'n': n})


@hier_app.command(name='alphastar')
@reported
def hier_alpha_star(*, alpha: int) -> int:
    """
    α* with its stage bound k, checked against 𝕃_α.

    Args:
        alpha: A natural number.
    """
    result = alpha_star(numeral(alpha), HierarchyBuilder(get_session().budget))
    violations = []
    if not result.stage_equal:
        violations.append(f'L_{alpha}* differs from L_{alpha}')
    if not result.formula_agrees:
        violations.append(f'defining formula disagrees at {alpha}')
    results = {
        'alpha': alpha,
        'k': result.k,
        'domain_stage': result.domain_stage,
        'members': result.members,
        'non_ordinals': result.non_ordinals,
        'undecided': result.undecided,
    }
    return emit(results, violations, inputs={'alpha': alpha})


@hier_app.command(name='witness')
@reported
def hier_witness(*, n: int) -> int:
    """
    Membership witness chain for n ∈ 𝕃_{2n+1}.

    Args:
        n: A natural number.
    """
    chain = ll_membership_witness(n)
    violations = [] if verify_witness(chain) else [f'chain for {n} fails']
    results = {
        'n': n,
        'steps': [
            {'value': step.value, 'stage': step.stage}
            for step in chain.steps
        ],
        'certified_stage': chain.certified_stage,
        'target_stage': chain.target_stage,
        'meets_target': chain.meets_target,
    }
    return emit(results, violations, inputs={'n': n})


@hier_app.command(name='definable')
@reported
def hier_definable(
    *,
    set_file: Annotated[Path, Parameter(name='--set')],
    depth: Optional[int] = None,
) -> int:
    """
    Definable subsets of a transitive set, each with a witness formula.

    Args:
        set_file: File holding the literal M.
        depth: Formula enumeration depth.
    """
    budget = get_session().budget
    if depth is None:
        depth = min(get_settings().DEF_DEPTH, budget.depth)
    M = read_set(set_file)
    found = definable_witnesses(M, depth, budget)
    results = [
        {'subset': d.subset, 'witness': to_text(d.witness)} for d in found
    ]
    return emit(results, inputs={'set': to_literal(M), 'depth': depth})


@kripke_app.command(name='validate')
@reported
def kripke_validate(*, model: Path) -> int:
    """
    Check a model file: frame, node structures and transitions.

    Args:
        model: JSON model file.
    """
    report = validate(load_model(model))
    return emit(
        report, report.violations, inputs={'model': model.read_text()}
    )


@kripke_app.command(name='check')
@reported
def kripke_check(
    *,
    model: Path,
    formula: str,
    node: Optional[str] = None,
    env: Optional[list[str]] = None,
) -> int:
    """
    Forcing of a formula at one node, or at every node.

    Args:
        model: JSON model file.
        formula: Formula text.
        node: Only this node.
        env: Bindings name=element of the node's domain, repeatable.
    """
    m = require_valid(load_model(model))
    phi = parse(formula)
    assignment = parse_bindings(env)
    forcing = Forcing(m, validated=True)
    nodes = [node] if node is not None else list(m.frame.nodes)
    forced = {p: forcing.forces(p, phi, assignment) for p in nodes}
    return emit(
        {
            'text': to_text(phi),
            'forced': forced,
            'valid': all(forced.values()),
        },
        inputs={
            'model': model.read_text(),
            'formula': formula,
            'node': node,
            'env': env or [],
        },
    )


@kripke_app.command(name='counterexample')
@reported
def kripke_counterexample() -> int:
    """The two-node model refuting decidable equality."""
    report = check_counterexample()
    return emit(
        {'model': to_file(two_node_example()), 'report': report},
        report.violations,
    )


@fullmodel_app.command(name='build')
@reported
def fullmodel_build(*, frame: Path, cutoff: int, dump: bool = False) -> int:
    """
    Generate every name of stage below the cutoff.

    Args:
        frame: JSON frame file with nodes and edges.
        cutoff: Stage cutoff.
        dump: Include the name graphs.
    """
    data = FrameFile.model_validate_json(frame.read_text())
    universe = build_universe(Frame.preorder(data.nodes, data.edges), cutoff)
    results = {
        'cutoff': cutoff,
        'counts': {p: len(names) for p, names in universe.items()},
    }
    if dump:
        results['names'] = universe
    return emit(
        results,
        inputs={'frame': data.model_dump(), 'cutoff': cutoff, 'dump': dump},
    )


@fullmodel_app.command(name='delta')
@reported
def fullmodel_delta(*, bits: str, alpha_node: str = '1') -> int:
    """
    Code a bit string as a name on the two-node chain and decode it.

    Args:
        bits: A string of 0 and 1.
        alpha_node: The node whose cone carries 1_α.
    """
    if set(bits) - {'0', '1'}:
        raise ValueError(INVALID_BITS)
    alpha_name = one_p(chains(2), alpha_node)
    values = [int(b) for b in bits]
    delta = delta_encode(values, alpha_name)
    decoded = ''.join(
        str(b) for b in delta_decode(delta, alpha_name, len(values))
    )
    violations = [] if decoded == bits else [f'{bits} decoded as {decoded}']
    return emit(
        {'bits': bits, 'decoded': decoded, 'name': delta},
        violations,
        inputs={'bits': bits, 'alpha_node': alpha_node},
    )


@fullmodel_app.command(name='check')
@reported
def fullmodel_check(
    *, prop: Annotated[NameProperty, Parameter(name='--property')]
) -> int:
    """
    One name-level property check on the two-node chain.

    Args:
        prop: star, onep, lem, delta or canonical.
    """
    report = PROPERTY_CHECKS[prop](chains(2))
    return emit(report, report.violations, inputs={'property': prop})


@erec_app.command(name='run')
@reported
def erec_run(
    *, term: Path, pmode: bool = False, env: Optional[list[str]] = None
) -> int:
    """
    Evaluate a closed WTerm from a file at the global fuel.

    Args:
        term: File with the WTerm s-expression.
        pmode: Powerset mode.
        env: Bindings for the term's variables, name=literal.
    """
    text = term.read_text()
    closed = substitute(parse_wterm(text), parse_env(env))
    for name in sorted(free_vars(closed)):
        raise UnboundVariable(name)
    fuel = get_session().budget.fuel
    outcome = eval_closed_term(closed, fuel, pmode)
    return emit(
        to_outcome_out(outcome),
        inputs={'term': text, 'pmode': pmode, 'env': env or []},
    )


@erec_app.command(name='apply')
@reported
def erec_apply(*, e: str, args: list[str], pmode: bool = False) -> int:
    """
    Apply an index or partial state to literal arguments.

    Args:
        e: The applied set, as a literal.
        args: Argument literals, repeatable.
        pmode: Powerset mode.
    """
    outcome = apply_all(
        parse_literal(e),
        [parse_literal(a) for a in args],
        get_session().budget.fuel,
        pmode,
    )
    return emit(
        to_outcome_out(outcome),
        inputs={'e': e, 'args': args, 'pmode': pmode},
    )


@erec_app.command(name='indices')
@reported
def erec_indices(*, out: Optional[Path] = None) -> int:
    """
    The index table; optionally written to a JSON file.

    Args:
        out: Destination file.
    """
    if out is not None:
        dump_index_table(out)
    return emit(index_table())


def read_realizer(path: Path, pmode: bool) -> HFSet:
    """A literal, or a WTerm s-expression evaluated to its value."""
    text = path.read_text().strip()
    if text.startswith('('):
        return term_value(load_term(path), pmode)
    return parse_literal(text)


@realize_app.command(name='check')
@reported
def realize_check(
    *,
    realizer: Path,
    formula: str,
    variant: Variant = Variant.WT,
    search_rank: Optional[int] = None,
    closed_world: bool = False,
    env: Optional[list[str]] = None,
) -> int:
    """
    Decide whether a set realizes a formula at the global fuel.

    Args:
        realizer: File with a literal or a WTerm s-expression.
        formula: Formula text.
        variant: wt, w or wp.
        search_rank: Unbounded quantifiers search V_(rank+1).
        closed_world: Treat the search universe as everything.
        env: Variable bindings name=literal, repeatable.
    """
    budget = get_session().budget
    rank = budget.search_rank if search_rank is None else search_rank
    if not 0 <= rank <= MAX_SEARCH_RANK:
        raise ValueError(BAD_SEARCH_RANK)
    a = read_realizer(realizer, variant == Variant.WP)
    phi = parse(formula)
    verdict = CHECKERS[variant](
        a,
        phi,
        Env(parse_env(env)),
        fuel=budget.fuel,
        search=search_universe(rank),
        closed_world=closed_world,
    )
    results = {
        'realizer': a,
        'text': to_text(phi),
        'kind': verdict.kind,
        'reason': verdict.reason,
        'variant': variant,
        'search_relative': closed_world,
        'interpretation': SURROGATE,
    }
    return emit(
        results,
        inputs={
            'realizer': to_literal(a),
            'formula': formula,
            'variant': variant,
            'search_rank': rank,
            'closed_world': closed_world,
            'env': env or [],
        },
    )


@realize_app.command(name='audit')
@reported
def realize_audit(*, variant: Variant = Variant.WT) -> int:
    """
    Truth audit of the stock corpus: Realized must imply true.

    Args:
        variant: wt, w or wp.
    """
    report = truth_audit(
        stock_corpus(), CHECKERS[variant], fuel=get_session().budget.fuel
    )
    return emit(report, report.violations, inputs={'variant': variant})


@app.command(name='suite')
@reported
def suite(
    *batteries: Battery,
    acceptance: Annotated[
        bool, Parameter(name=['--acceptance', '--paper-checks'])
    ] = False,
    quick: bool = False,
) -> int:
    """
    Run property batteries; all of them when none are named.

    Args:
        batteries: Battery names.
        acceptance: Every battery, named or not.
        quick: Smaller samples, for a fast smoke run.
    """
    selected = list(Battery) if acceptance or not batteries else batteries
    scale = QUICK if quick else ACCEPTANCE
    reports = run_suite(selected, scale, get_session().budget)
    violations = [
        f'{name}: {message}'
        for name, report in reports.items()
        for message in report.violations
    ]
    results = {
        'batteries': {
            name: {
                'ok': report.ok,
                'checked': report.checked,
                'violations': len(report.violations),
            }
            for name, report in reports.items()
        },
        'details': reports,
    }
    return emit(
        results,
        violations,
        inputs={
            'batteries': [b.value for b in selected],
            'acceptance': acceptance,
            'quick': quick,
        },
    )


def configure_logging() -> None:
    logging.basicConfig(
        level=get_settings().LOG_LEVEL,
        format='%(message)s',
        handlers=[
            RichHandler(console=Console(stderr=True), show_path=False)
        ],
        force=True,
    )


@app.meta.default
def launcher(
    *tokens: Annotated[str, Parameter(show=False, allow_leading_hyphen=True)],
    budget_elems: Optional[int] = None,
    budget_depth: Optional[int] = None,
    fuel: Optional[int] = None,
    seed: Optional[int] = None,
    output_format: Annotated[
        OutputFormat, Parameter(name='--format')
    ] = OutputFormat.JSON,
) -> int:
    """
    Global budget flags; they override settings for this invocation.

    Args:
        budget_elems: Largest set any builder may produce.
        budget_depth: Largest formula depth for enumerators.
        fuel: Machine fuel per evaluation.
        seed: Seed for every sampled check.
        output_format: json or text on standard output.
    """
    budget = Budget.from_settings(
        elems=budget_elems, depth=budget_depth, fuel=fuel, seed=seed
    )
    open_session(list(tokens), budget, output_format)
    logger.debug('budget %s', budget.model_dump())
    return app(tokens, exit_on_error=False)


def run(tokens: Optional[Sequence[str]] = None) -> int:
    """
    Dispatches one invocation.

    :return: the process exit code.
    """
    configure_logging()
    tokens = sys.argv[1:] if tokens is None else list(tokens)
    try:
        result = app.meta(tokens, exit_on_error=False)
    except CycloptsError:
        return int(ExitCode.USAGE)
    return result if isinstance(result, int) else int(ExitCode.OK)


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
