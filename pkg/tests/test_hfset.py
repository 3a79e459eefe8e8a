from http import HTTPStatus

import pytest
from hypothesis import given, settings

from hf_workbench.resources.hfset.enums import PairSide
from hf_workbench.resources.hfset.literal import parse_literal, to_literal
from hf_workbench.resources.hfset.model import (
    EMPTY,
    HFSet,
    as_natural,
    as_pair,
    domain,
    hf,
    image,
    is_ordinal,
    is_transitive,
    make_tuple,
    numeral,
    pair,
    powerset,
    project,
    range_of,
    set_add,
    transitive_closure,
    union,
)
from hf_workbench.resources.hfset.sampling import (
    hfsets_of_rank,
    random_hfsets,
    small_sets,
)
from hf_workbench.resources.shared.errors import (
    BudgetExceeded,
    EmptyTuple,
    LiteralSyntaxError,
    NotAPair,
)
from hf_workbench.settings import get_settings
from hf_workbench.utils import get_rng
from tests.strategies import hfsets

API_PREFIX = get_settings().API_PREFIX


def test_interning_makes_equal_sets_identical():
    assert HFSet.of([EMPTY]) is numeral(1)
    assert hf(numeral(1), numeral(0)) is hf(numeral(0), numeral(1))
    assert hf(numeral(0), numeral(1)) is numeral(2)


def test_numerals_and_naturals():
    assert len(numeral(5)) == 5
    assert as_natural(numeral(7)) == 7
    assert as_natural(hf(numeral(1))) is None


def test_numeral_rejects_negative():
    with pytest.raises(ValueError):
        numeral(-1)


def test_parse_literal_forms():
    assert parse_literal('{}') is EMPTY
    assert parse_literal('{ 0 , 1 }') is numeral(2)
    assert parse_literal('3') is numeral(3)
    assert parse_literal('<1,2>') is pair(numeral(1), numeral(2))
    assert parse_literal('{{},{{}}}') is numeral(2)


def test_to_literal_prefers_numerals_then_pairs():
    assert to_literal(numeral(3)) == '3'
    assert to_literal(pair(numeral(0), numeral(1))) == '<0,1>'
    assert to_literal(hf(numeral(2))) == '{2}'
    assert to_literal(hf(numeral(1))) == '<0,0>'


@pytest.mark.parametrize('text', ['{0,', '{}}', '<1>', '{a}', ''])
def test_parse_literal_errors(text):
    with pytest.raises(LiteralSyntaxError):
        parse_literal(text)


def test_literal_error_reports_offset():
    with pytest.raises(LiteralSyntaxError) as error:
        parse_literal('{0,1}x')
    assert error.value.position == 5


def test_pairs_and_projections():
    a, b = numeral(1), numeral(3)
    assert as_pair(pair(a, b)) == (a, b)
    assert pair(a, a) is hf(hf(a))
    assert project(pair(a, b), PairSide.FIRST) is a
    assert project(pair(a, b), PairSide.SECOND) is b
    assert as_pair(numeral(2)) is None


def test_project_non_pair():
    with pytest.raises(NotAPair):
        project(numeral(3), PairSide.FIRST)


def test_tuples_nest_to_the_right():
    a, b, c = numeral(0), numeral(1), numeral(2)
    assert make_tuple([a, b, c]) is pair(a, pair(b, c))
    assert make_tuple([a]) is a


def test_empty_tuple():
    with pytest.raises(EmptyTuple):
        make_tuple([])


def test_relations():
    r = hf(pair(numeral(0), numeral(1)), pair(numeral(0), numeral(2)))
    assert domain(r) is numeral(1)
    assert range_of(r) is hf(numeral(1), numeral(2))
    assert image(r, numeral(0)) is hf(numeral(1), numeral(2))
    assert image(r, numeral(1)) is EMPTY


def test_transitivity_and_ordinals():
    assert is_ordinal(numeral(4))
    assert is_transitive(transitive_closure(hf(hf(numeral(2)))))
    assert not is_transitive(hf(numeral(2)))
    assert not is_ordinal(hf(numeral(0), hf(numeral(1))))


def test_powerset_cap():
    assert len(powerset(numeral(3))) == 8
    with pytest.raises(BudgetExceeded):
        powerset(numeral(5), cap=4)


def test_set_addition():
    assert set_add(numeral(2), numeral(3)) is numeral(5)
    assert set_add(numeral(1), EMPTY) is numeral(1)


def test_sampling():
    assert len(hfsets_of_rank(3)) == 4
    assert len(hfsets_of_rank(4)) == 16
    assert all(len(transitive_closure(x)) <= 2 for x in small_sets(2))
    first = random_hfsets(get_rng(7), 5)
    assert first == random_hfsets(get_rng(7), 5)


@given(hfsets())
@settings(deadline=None, max_examples=200)
def test_literal_round_trip(x):
    assert parse_literal(to_literal(x)) is x


@given(hfsets(), hfsets())
@settings(deadline=None)
def test_union_is_commutative(x, y):
    assert union(x, y) is union(y, x)
    assert x <= union(x, y)


@given(hfsets())
@settings(deadline=None)
def test_transitive_closure_contains_members(x):
    closure = transitive_closure(x)
    assert x <= closure
    assert is_transitive(closure)


def test_api_parse(client):
    response = client.post(f'{API_PREFIX}/sets/parse', json={'literal': '3'})
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {
        'literal': '3',
        'rank': 3,
        'size': 3,
        'is_ordinal': True,
        'natural': 3,
    }


def test_api_parse_error(client):
    response = client.post(
        f'{API_PREFIX}/sets/parse', json={'literal': '{0,'}
    )
    assert response.status_code == HTTPStatus.BAD_REQUEST


def test_api_algebra(client):
    response = client.post(
        f'{API_PREFIX}/sets/algebra',
        json={'kind': 'BINARY_UNION', 'x': '1', 'y': '{1}'},
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json()['literal'] == '2'


def test_api_project_non_pair(client):
    response = client.post(
        f'{API_PREFIX}/sets/project', json={'literal': '3', 'side': 'FIRST'}
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert response.json()['detail'] == 'Set is not an ordered pair'
