from http import HTTPStatus

import pytest
from hypothesis import given, settings

from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import (
    EMPTY,
    hf,
    image,
    make_tuple,
    numeral,
    pair,
    union,
)
from hf_workbench.resources.operations.enums import (
    AUXILIARY,
    FUNDAMENTAL,
    OpCode,
)
from hf_workbench.resources.operations.evaluator import (
    binary_union,
    eval_aux_g,
    eval_fund,
    eval_term,
    expand_g1,
    kuratowski_term,
    op_abc,
    op_acb,
    op_diff,
    op_eq,
    op_forall,
    op_imp,
    op_in,
    op_inter,
    op_union,
    transitive_extension,
)
from hf_workbench.resources.operations.model import (
    app,
    const,
    parse_op_term,
    term_depth,
    term_size,
    term_vars,
    to_sexpr,
    var,
)
from hf_workbench.resources.operations.schemas import (
    ARITY_MISMATCH,
    UNKNOWN_OPCODE,
)
from hf_workbench.resources.shared.errors import (
    TermSyntaxError,
    UnboundVariable,
)
from hf_workbench.settings import get_settings
from tests.strategies import hfsets

API_PREFIX = get_settings().API_PREFIX

ZERO, ONE, TWO, THREE = (numeral(n) for n in range(4))


def test_operation_tables_cover_every_code():
    assert len(FUNDAMENTAL) == 13
    assert len(AUXILIARY) == 4
    assert all(code.arity == 2 for code in FUNDAMENTAL)
    assert all(code.arity == 3 for code in AUXILIARY)


def test_pair_and_difference():
    assert eval_fund(OpCode.PAIR, ONE, TWO) == hf(ONE, TWO)
    assert op_diff(THREE, ONE) == hf(ONE, TWO)


def test_inter_reads_as_bounded_intersection():
    assert op_inter(THREE, EMPTY) == THREE
    assert op_inter(THREE, hf(TWO, ONE)) == ONE


def test_union_ignores_second_argument():
    assert op_union(hf(ONE, TWO), THREE) == TWO


def test_times():
    assert eval_fund(OpCode.TIMES, ONE, ONE) == hf(pair(ZERO, ZERO))


def test_imp_with_pair_parameter():
    assert op_imp(THREE, pair(TWO, ONE)) == hf(ZERO, TWO)


def test_imp_without_pair_parameter_is_empty():
    assert op_imp(THREE, TWO) == EMPTY


def test_forall_collects_images():
    relation = hf(pair(ZERO, ONE), pair(ONE, TWO))
    assert op_forall(relation, TWO) == hf(hf(ONE), hf(TWO))


def test_domain_and_range():
    relation = hf(pair(ZERO, ONE), pair(ONE, TWO), THREE)
    assert eval_fund(OpCode.DOM, relation, EMPTY) == hf(ZERO, ONE)
    assert eval_fund(OpCode.RAN, relation, EMPTY) == hf(ONE, TWO)


def test_abc_and_acb_rearrange_triples():
    relation = hf(pair(ZERO, ONE))
    assert op_abc(relation, ONE) == hf(pair(ZERO, pair(ONE, ZERO)))
    assert op_acb(relation, ONE) == hf(pair(ZERO, pair(ZERO, ONE)))


def test_eq_is_diagonal_of_intersection():
    assert op_eq(THREE, TWO) == hf(pair(ZERO, ZERO), pair(ONE, ONE))


def test_in_collects_membership_pairs():
    expected = hf(pair(ONE, ZERO), pair(TWO, ZERO), pair(TWO, ONE))
    assert op_in(TWO, hf(ONE, TWO)) == expected


def test_auxiliary_operations():
    relation = hf(pair(ZERO, ONE), pair(ZERO, TWO))
    assert eval_aux_g(OpCode.G0, ONE, TWO, THREE) == pair(ONE, TWO)
    assert eval_aux_g(OpCode.G1, relation, ZERO, EMPTY) == hf(ONE, TWO)
    assert eval_aux_g(OpCode.G2, ONE, TWO, THREE) == make_tuple(
        [ONE, TWO, THREE]
    )
    expected = hf(ONE, pair(TWO, THREE))
    assert eval_aux_g(OpCode.G3, ONE, TWO, THREE) == expected


@settings(deadline=None, max_examples=50)
@given(hfsets(), hfsets())
def test_expanded_g1_agrees_with_image(x, y):
    term = expand_g1(var('x'), var('y'))
    assert eval_term(term, {'x': x, 'y': y}) == image(x, y)


@settings(deadline=None, max_examples=50)
@given(hfsets(), hfsets())
def test_binary_union_term(s, t):
    term = binary_union(var('s'), var('t'))
    assert eval_term(term, {'s': s, 't': t}) == union(s, t)


@settings(deadline=None, max_examples=50)
@given(hfsets(), hfsets())
def test_kuratowski_term_builds_pairs(s, t):
    term = kuratowski_term(var('s'), var('t'))
    assert eval_term(term, {'s': s, 't': t}) == pair(s, t)


def test_expand_g1_uses_five_applications():
    term = expand_g1(var('x'), var('y'))
    assert term_depth(term) == 5
    assert term_size(term) == 8
    assert term_vars(term) == {'x', 'y'}


def test_eval_term_unbound_variable():
    with pytest.raises(UnboundVariable):
        eval_term(app(OpCode.PAIR, var('x'), var('y')), {'x': ONE})


def test_eval_term_shares_subterms():
    x = var('x')
    shared = app(OpCode.PAIR, x, x)
    term = app(OpCode.PAIR, shared, shared)
    assert term_size(term) == 3
    assert eval_term(term, {'x': ZERO}) == hf(ONE)


def test_parse_and_print_terms():
    term = parse_op_term('(pair (var x) (const {}))')
    assert term == app(OpCode.PAIR, var('x'), const(EMPTY))
    assert to_sexpr(term) == '(pair (var x) (const 0))'
    assert parse_op_term(to_sexpr(term)) == term


def test_parse_auxiliary_term():
    term = parse_op_term('(g3 (var x) (var y) (const {0}))')
    assert eval_term(term, {'x': ZERO, 'y': ONE}) == hf(
        ZERO, pair(ONE, ONE)
    )


@pytest.mark.parametrize(
    ('text', 'message'),
    [
        ('(cup (var x) (var y))', UNKNOWN_OPCODE),
        ('(pair (var x))', ARITY_MISMATCH),
        ('(g0 (var x) (var y))', ARITY_MISMATCH),
    ],
)
def test_parse_term_errors(text, message):
    with pytest.raises(TermSyntaxError) as error:
        parse_op_term(text)
    assert error.value.message.startswith(message)


def test_parse_term_unbalanced():
    with pytest.raises(TermSyntaxError):
        parse_op_term('(pair (var x) (var y)')


def test_transitive_extension_grows_and_keeps_members():
    extended = transitive_extension(ONE, with_aux=False)
    assert extended == TWO
    assert len(transitive_extension(ONE)) > len(extended)


def test_apply_operation(client):
    response = client.post(
        f'{API_PREFIX}/operations/apply',
        json={'code': 'eq', 'x': '3', 'y': '2'},
    )
    assert response.status_code == HTTPStatus.OK
    expected = hf(pair(ZERO, ZERO), pair(ONE, ONE))
    assert response.json() == {'literal': to_literal(expected)}


def test_apply_auxiliary_operation(client):
    response = client.post(
        f'{API_PREFIX}/operations/apply',
        json={'code': 'g0', 'x': '0', 'y': '1', 'z': '0'},
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {'literal': to_literal(pair(ZERO, ONE))}


def test_apply_auxiliary_without_third_argument(client):
    response = client.post(
        f'{API_PREFIX}/operations/apply',
        json={'code': 'g0', 'x': '0', 'y': '1'},
    )
    assert response.status_code == HTTPStatus.BAD_REQUEST
    assert response.json()['detail'].startswith(ARITY_MISMATCH)


def test_apply_unknown_code(client):
    response = client.post(
        f'{API_PREFIX}/operations/apply',
        json={'code': 'cup', 'x': '0', 'y': '1'},
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY


def test_eval_term_route(client):
    response = client.post(
        f'{API_PREFIX}/operations/eval',
        json={'term': '(pair (var x) (var x))', 'env': {'x': '1'}},
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {'literal': to_literal(hf(ONE))}


def test_eval_term_route_unbound(client):
    response = client.post(
        f'{API_PREFIX}/operations/eval',
        json={'term': '(pair (var x) (var y))', 'env': {'x': '1'}},
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY


def test_inspect_term_route(client):
    response = client.post(
        f'{API_PREFIX}/operations/inspect',
        json={'term': '(union (pair (var s) (var t)) (var s))'},
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {
        'term': '(union (pair (var s) (var t)) (var s))',
        'depth': 2,
        'size': 5,
    }
