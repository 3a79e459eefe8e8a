from http import HTTPStatus

import pytest
from hypothesis import given, settings

from hf_workbench.resources.formula.analysis import relativize
from hf_workbench.resources.formula.model import Const
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.hfset.model import EMPTY, hf, numeral, pair
from hf_workbench.resources.oracle.evaluator import (
    comprehension,
    eval_formula,
    eval_term_formula,
    subset_range,
)
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.oracle.schemas import (
    NO_VARIABLES,
    UNBOUNDED_WITHOUT_UNIVERSE,
    VARS_ARGS_MISMATCH,
)
from hf_workbench.resources.shared.errors import (
    BudgetExceeded,
    NotSigma0,
    UnboundedWithoutUniverse,
    UnboundVariable,
)
from hf_workbench.settings import get_settings
from tests.strategies import formulas, hfsets

API_PREFIX = get_settings().API_PREFIX

ZERO, ONE, TWO, THREE = (numeral(n) for n in range(4))


@pytest.mark.parametrize(
    ('text', 'expected'),
    [
        ('0 in 1', True),
        ('1 in 1', False),
        ('false', False),
        ('~false', True),
        ('0 in 1 -> 1 in 0', False),
        ('all x in 3. some y in 3. x in y | y = 2', True),
        ('some x in 3. all y in x. false', True),
        ('some y sub 2. y = 1', True),
        ('all y sub 2. some z in 3. y = z', False),
    ],
)
def test_closed_formulas(text, expected):
    assert eval_term_formula(parse(text)) is expected


def test_eval_with_assignment():
    env = Env({'a': TWO, 'b': THREE})
    assert eval_formula(parse('a in b & ~b in a'), env)
    assert not eval_formula(parse('a = b'), env)


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        eval_formula(parse('a in b'), Env({'a': ONE}))


def test_unbounded_needs_universe():
    with pytest.raises(UnboundedWithoutUniverse) as error:
        eval_term_formula(parse('All x. x = x'))
    assert error.value.message == UNBOUNDED_WITHOUT_UNIVERSE


def test_unbounded_ranges_over_universe():
    assert eval_term_formula(parse('Some x. 2 in x'), universe=THREE) is False
    assert eval_term_formula(parse('Some x. 1 in x'), universe=THREE)
    assert eval_term_formula(parse('All x. ~x in x'), universe=THREE)


def test_subset_quantifier_respects_cap():
    with pytest.raises(BudgetExceeded):
        eval_formula(
            parse('some y sub x. y = x'), Env({'x': numeral(5)}), cap=4
        )


def test_subset_range():
    assert set(subset_range(TWO, cap=4)) == {EMPTY, ONE, hf(ONE), TWO}
    with pytest.raises(BudgetExceeded):
        subset_range(THREE, cap=2)


def test_env_bind_leaves_original_untouched():
    env = Env({'x': ONE})
    bound = env.bind('x', TWO)
    assert env['x'] is ONE
    assert bound['x'] is TWO
    assert 'y' not in bound


@settings(deadline=None, max_examples=60)
@given(formulas(depth=3), hfsets(max_leaves=4), hfsets(max_leaves=4))
def test_relativized_formula_agrees_with_universe(phi, x, y):
    universe = hf(ZERO, ONE, TWO, x, y)
    env = Env({'x': x, 'y': y}, universe)
    bounded = relativize(phi, Const(universe))
    assert eval_formula(bounded, env) == eval_formula(phi, env)


def test_comprehension_single_variable():
    assert comprehension(parse('0 in x'), ['x'], [THREE]) == hf(ONE, TWO)


def test_comprehension_tuples_are_reversed():
    result = comprehension(parse('x1 in x2'), ['x1', 'x2'], [TWO, TWO])
    assert result == hf(pair(ONE, ZERO))


def test_comprehension_rejects_unbounded():
    with pytest.raises(NotSigma0):
        comprehension(parse('All y. x in y'), ['x'], [ONE])


@pytest.mark.parametrize(
    ('variables', 'args', 'message'),
    [
        ([], [], NO_VARIABLES),
        (['x'], [ONE, TWO], VARS_ARGS_MISMATCH),
    ],
)
def test_comprehension_argument_errors(variables, args, message):
    with pytest.raises(ValueError, match=message):
        comprehension(parse('x = x'), variables, args)


def test_eval_route(client):
    response = client.post(
        f'{API_PREFIX}/oracle/eval',
        json={'text': 'a in b', 'env': {'a': '0', 'b': '1'}},
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {'text': 'a in b', 'value': True}


def test_eval_route_with_universe(client):
    response = client.post(
        f'{API_PREFIX}/oracle/eval',
        json={'text': 'Some x. 1 in x', 'universe': '3'},
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json()['value'] is True


def test_eval_route_unbounded_without_universe(client):
    response = client.post(
        f'{API_PREFIX}/oracle/eval', json={'text': 'All x. x = x'}
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert response.json() == {'detail': UNBOUNDED_WITHOUT_UNIVERSE}


def test_eval_route_syntax_error(client):
    response = client.post(
        f'{API_PREFIX}/oracle/eval', json={'text': 'a in'}
    )
    assert response.status_code == HTTPStatus.BAD_REQUEST


def test_comprehension_route(client):
    response = client.post(
        f'{API_PREFIX}/oracle/comprehension',
        json={'text': '0 in x', 'vars': ['x'], 'args': ['3']},
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {'literal': '<0,1>', 'size': 2}


def test_comprehension_route_mismatch(client):
    response = client.post(
        f'{API_PREFIX}/oracle/comprehension',
        json={'text': 'x = x', 'vars': ['x'], 'args': ['1', '2']},
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert response.json() == {'detail': VARS_ARGS_MISMATCH}
