from http import HTTPStatus

import pytest
from hypothesis import given, settings

from hf_workbench.resources.compiler.checks import (
    check_equivalence,
    check_separation_terms,
)
from hf_workbench.resources.compiler.compiler import (
    STAGE_SLACK,
    compile_comprehension,
    compile_separation,
    stage_bound,
)
from hf_workbench.resources.compiler.corpus import CORPUS
from hf_workbench.resources.compiler.schemas import (
    DUPLICATE_VARIABLE,
    NOT_SIGMA0,
    POSITION_OUT_OF_RANGE,
)
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.hfset.model import HFSet, hf, numeral, pair
from hf_workbench.resources.operations.enums import FUNDAMENTAL
from hf_workbench.resources.operations.evaluator import eval_term
from hf_workbench.resources.operations.model import (
    term_codes,
    term_depth,
    term_vars,
    to_sexpr,
)
from hf_workbench.resources.oracle.evaluator import (
    comprehension,
    eval_formula,
)
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.shared.errors import NotSigma0, UnboundVariable
from hf_workbench.settings import get_settings
from tests.strategies import hfsets, sigma0_formulas

API_PREFIX = get_settings().API_PREFIX

ZERO, ONE, TWO, THREE = (numeral(n) for n in range(4))


def test_membership_compiles_to_one_operation():
    result = compile_comprehension(parse('x1 in x2'), ['x1', 'x2'])
    assert to_sexpr(result.term) == '(in (var x1) (var x2))'
    assert result.var_order == ('x1', 'x2')
    assert result.stage_bound == 1 + STAGE_SLACK
    assert result.parameter is None


def test_compiled_term_matches_comprehension():
    phi = parse('all z in x1. z in x2')
    term = compile_comprehension(phi, ['x1', 'x2']).term
    args = [THREE, hf(ONE, TWO)]
    expected = comprehension(phi, ['x1', 'x2'], args)
    assert eval_term(term, {'x1': THREE, 'x2': hf(ONE, TWO)}) == expected


def test_compiled_terms_use_fundamental_operations_only():
    for item in CORPUS:
        term = compile_comprehension(item.formula, item.vars).term
        assert term_codes(term) <= set(FUNDAMENTAL), item.name
        assert term_vars(term) <= set(item.vars), item.name


@settings(deadline=None, max_examples=40)
@given(sigma0_formulas(depth=2), hfsets(max_leaves=4), hfsets(max_leaves=4))
def test_compiled_term_agrees_with_oracle(phi, x, y):
    term = compile_comprehension(phi, ['x', 'y']).term
    expected = comprehension(phi, ['x', 'y'], [x, y])
    assert eval_term(term, {'x': x, 'y': y}) == expected


@settings(deadline=None, max_examples=40)
@given(sigma0_formulas(depth=2), hfsets(max_leaves=4), hfsets(max_leaves=4))
def test_separation_term_filters_parameter(phi, a, y):
    result = compile_separation(phi, 1, ['x', 'y'])
    expected = HFSet.of(
        e for e in a if eval_formula(phi, Env({'x': e, 'y': y}))
    )
    value = eval_term(result.term, {result.parameter: a, 'y': y})
    assert value == expected


def test_separation_on_second_position():
    phi = parse('x in y')
    result = compile_separation(phi, 2, ['x', 'y'])
    assert result.parameter == 'a'
    value = eval_term(result.term, {'a': THREE, 'x': ONE})
    assert value == hf(TWO)


def test_separation_parameter_avoids_formula_names():
    result = compile_separation(parse('a in y'), 1, ['a', 'y'])
    assert result.parameter not in {'a', 'y'}


def test_constants_are_compiled():
    phi = parse('x1 = <0,1>')
    term = compile_comprehension(phi, ['x1']).term
    domain = hf(ZERO, pair(ZERO, ONE))
    assert eval_term(term, {'x1': domain}) == hf(pair(ZERO, ONE))


def test_stage_bound_matches_first_separation():
    phi = parse('x in y & ~x = y')
    expected = compile_separation(phi, 1, ['x', 'y']).stage_bound
    assert stage_bound(phi) == expected
    assert stage_bound(phi) == term_depth(
        compile_separation(phi, 1, ['x', 'y']).term
    ) + STAGE_SLACK


def test_stage_bound_of_closed_formula():
    assert stage_bound(parse('0 in 1')) >= STAGE_SLACK


def test_rejects_subset_bounded_formula():
    with pytest.raises(NotSigma0) as error:
        compile_comprehension(parse('some z sub x. z = x'), ['x'])
    assert error.value.message == NOT_SIGMA0


def test_rejects_unbounded_formula():
    with pytest.raises(NotSigma0):
        compile_comprehension(parse('All z. z in x'), ['x'])


def test_rejects_duplicate_variables():
    with pytest.raises(ValueError, match=DUPLICATE_VARIABLE):
        compile_comprehension(parse('x = x'), ['x', 'x'])


def test_rejects_free_variable_outside_order():
    with pytest.raises(UnboundVariable):
        compile_comprehension(parse('x in z'), ['x'])


@pytest.mark.parametrize('position', [0, 3])
def test_rejects_position_out_of_range(position):
    with pytest.raises(ValueError, match=POSITION_OUT_OF_RANGE):
        compile_separation(parse('x in y'), position, ['x', 'y'])


def test_equivalence_battery():
    report = check_equivalence(samples=3, max_trcl=3, seed=7)
    assert report.ok, report.violations
    assert report.checked == 3 * len(CORPUS)


def test_separation_battery():
    report = check_separation_terms(samples=1, max_trcl=3, seed=7)
    assert report.ok, report.violations


def test_comprehension_route(client):
    response = client.post(
        f'{API_PREFIX}/compiler/comprehension',
        json={'text': 'x1 in x2', 'vars': ['x1', 'x2']},
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {
        'term': '(in (var x1) (var x2))',
        'var_order': ['x1', 'x2'],
        'parameter': None,
        'stage_bound': 3,
        'depth': 1,
        'size': 3,
    }


def test_comprehension_route_not_sigma0(client):
    response = client.post(
        f'{API_PREFIX}/compiler/comprehension',
        json={'text': 'All z. z in x', 'vars': ['x']},
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert response.json() == {'detail': NOT_SIGMA0}


def test_comprehension_route_duplicate_variables(client):
    response = client.post(
        f'{API_PREFIX}/compiler/comprehension',
        json={'text': 'x = x', 'vars': ['x', 'x']},
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert response.json() == {'detail': DUPLICATE_VARIABLE}


def test_comprehension_route_needs_variables(client):
    response = client.post(
        f'{API_PREFIX}/compiler/comprehension',
        json={'text': 'x = x', 'vars': []},
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY


def test_separation_route(client):
    response = client.post(
        f'{API_PREFIX}/compiler/separation',
        json={'text': 'x in y', 'vars': ['x', 'y'], 'position': 1},
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json()['parameter'] == 'a'


def test_stage_bound_route(client):
    response = client.post(
        f'{API_PREFIX}/compiler/stage-bound', json={'text': 'x in y'}
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {
        'text': 'x in y',
        'stage_bound': stage_bound(parse('x in y')),
    }
