from http import HTTPStatus

import pytest

from hf_workbench.resources.erecursion.catalog import (
    identity_term,
    identity_value,
    omega_term,
    pair_term,
    separation_term,
    subset_family_term,
    tagged_term,
    vm_corpus,
)
from hf_workbench.resources.erecursion.checks import (
    check_combinators,
    check_divergence,
    check_fuel_monotonicity,
    check_identity,
    check_separation,
    check_set_clauses,
)
from hf_workbench.resources.erecursion.enums import INDEX_ORDER, Index
from hf_workbench.resources.erecursion.machine import (
    Machine,
    apply,
    apply_all,
    eval_closed_term,
)
from hf_workbench.resources.erecursion.model import (
    ApplyError,
    Idx,
    NonFinitary,
    Timeout,
    Value,
    WApp,
    WConst,
    WVar,
    apply_term,
    free_vars,
    substitute,
)
from hf_workbench.resources.erecursion.parser import parse_wterm, to_sexpr
from hf_workbench.resources.erecursion.repository import (
    dump_index_table,
    index_table,
    load_term,
)
from hf_workbench.resources.erecursion.schemas import (
    FREE_VARIABLE,
    FUEL_REQUIRED,
    NOT_APPLICABLE,
    POWERSET_MODE,
    TOO_MANY_ARGUMENTS,
    UNKNOWN_INDEX,
    IndexTableOut,
)
from hf_workbench.resources.hfset.model import (
    EMPTY,
    HFSet,
    hf,
    numeral,
    pair,
    powerset,
    subsets,
)
from hf_workbench.resources.shared.errors import TermSyntaxError
from hf_workbench.settings import get_settings

API_PREFIX = get_settings().API_PREFIX

ZERO, ONE, TWO, THREE = (numeral(n) for n in range(4))

K = Idx(Index.K)


def test_index_numbers_are_stable():
    assert len(INDEX_ORDER) == 18
    assert Index.K.number == 1
    assert Index.S.number == 2
    assert Index.POW.number == 18
    assert Index.K.code is ONE
    assert Index.DN.arity == 4


def test_k_returns_first_argument():
    assert apply_all(Index.K.code, [TWO, THREE]) == Value(TWO)


def test_partial_application_is_a_state():
    assert apply(Index.K.code, TWO) == Value(pair(Index.K.code, TWO))


def test_pair_argument_stays_a_single_argument():
    argument = pair(ONE, TWO)
    state = apply(Index.K.code, argument)
    assert state == Value(pair(Index.K.code, argument))
    assert apply(state.value, THREE) == Value(argument)


def test_too_many_arguments():
    state = pair(pair(Index.K.code, ONE), TWO)
    outcome = apply(state, THREE)
    assert isinstance(outcome, ApplyError)
    assert outcome.detail.startswith(TOO_MANY_ARGUMENTS)


def test_empty_set_is_not_applicable():
    outcome = apply(EMPTY, ONE)
    assert outcome == ApplyError(f'{NOT_APPLICABLE}: 0')


def test_powerset_needs_powerset_mode():
    assert apply(Index.POW.code, TWO, pmode=True) == Value(powerset(TWO))
    assert apply(Index.POW.code, TWO) == ApplyError(POWERSET_MODE)


def test_omega_is_not_finitary():
    assert apply(Index.OMEGA.code, EMPTY) == NonFinitary()


def test_self_application_runs_out_of_fuel():
    assert eval_closed_term(omega_term(), 50) == Timeout(50)


def test_fuel_must_be_positive():
    with pytest.raises(ValueError, match=FUEL_REQUIRED):
        Machine(0)
    with pytest.raises(ValueError, match=FUEL_REQUIRED):
        apply(Index.K.code, ONE, fuel=-1)


def test_free_variable_is_an_application_error():
    outcome = eval_closed_term(WApp(K, WVar('x')))
    assert outcome == ApplyError(f'{FREE_VARIABLE}: x')


def test_skk_evaluates_to_identity_state():
    assert eval_closed_term(identity_term()) == Value(identity_value())
    for x in (EMPTY, TWO, hf(pair(ONE, TWO))):
        assert apply(identity_value(), x) == Value(x)


def test_abstraction_of_pairing():
    term = WApp(tagged_term(), WConst(TWO))
    assert eval_closed_term(term) == Value(pair(TWO, EMPTY))


def test_hand_built_separation():
    term = apply_term(separation_term(), WConst(TWO), WConst(THREE))
    assert eval_closed_term(term) == Value(TWO)


def test_subset_family_in_powerset_mode():
    term = WApp(subset_family_term(), WConst(TWO))
    expected = HFSet.of(pair(s, EMPTY) for s in subsets(TWO))
    assert eval_closed_term(term, pmode=True) == Value(expected)
    assert eval_closed_term(term) == ApplyError(POWERSET_MODE)


@pytest.mark.parametrize(
    ('name', 'expected'),
    [
        ('k', Value(numeral(2))),
        ('skk', Value(numeral(3))),
        ('pair', Value(pair(numeral(2), numeral(3)))),
        ('first', Value(numeral(2))),
        ('second', Value(numeral(3))),
        ('succ-map', Value(hf(numeral(1), numeral(2), numeral(3)))),
        ('separation', Value(numeral(2))),
        ('nested-skk', Value(numeral(2))),
        ('non-finitary', NonFinitary()),
    ],
)
def test_vm_corpus_values(name, expected):
    term, pmode = vm_corpus()[name]
    assert eval_closed_term(term, pmode=pmode) == expected


def test_vm_corpus_divergent_term():
    term, pmode = vm_corpus()['omega']
    assert isinstance(eval_closed_term(term, 200, pmode), Timeout)


def test_parse_application_shorthand():
    term = parse_wterm('(app (idx k) (const 2) (const 3))')
    assert term == apply_term(K, WConst(TWO), WConst(THREE))
    assert to_sexpr(term) == '(app (idx k) (const 2) (const 3))'


def test_parse_rejects_unknown_index():
    with pytest.raises(TermSyntaxError, match=UNKNOWN_INDEX):
        parse_wterm('(idx q)')


def test_parse_rejects_application_without_argument():
    with pytest.raises(TermSyntaxError):
        parse_wterm('(app (idx k))')


def test_substitution_closes_terms():
    term = parse_wterm('(app (idx k) (var x) (var y))')
    assert free_vars(term) == {'x', 'y'}
    closed = substitute(term, {'x': ONE, 'y': TWO})
    assert free_vars(closed) == set()
    assert eval_closed_term(closed) == Value(ONE)


def test_index_table_file(tmp_path):
    path = tmp_path / 'indices.json'
    dump_index_table(path)
    table = IndexTableOut.model_validate_json(path.read_text())
    assert table == index_table()
    assert table.indices[-1].name == Index.POW


def test_load_term(tmp_path):
    path = tmp_path / 'term.sexpr'
    path.write_text(to_sexpr(pair_term(WConst(ONE), WConst(TWO))))
    assert eval_closed_term(load_term(path)) == Value(pair(ONE, TWO))


def test_property_batteries():
    for report in (
        check_combinators(max_trcl=2),
        check_identity(samples=5, seed=3),
        check_set_clauses(max_trcl=2),
        check_divergence(fuel=1_000),
        check_fuel_monotonicity(),
        check_separation(samples=5, seed=3),
    ):
        assert report.ok, report.violations
        assert report.checked > 0


def test_indices_route(client):
    response = client.get(f'{API_PREFIX}/erecursion/indices')
    assert response.status_code == HTTPStatus.OK
    body = response.json()
    assert body['version'] == get_settings().INDEX_TABLE_VERSION
    assert len(body['indices']) == 18
    assert body['indices'][0] == {'name': 'k', 'number': 1, 'arity': 2}


def test_apply_route(client):
    response = client.post(
        f'{API_PREFIX}/erecursion/apply', json={'e': '1', 'args': ['2', '3']}
    )
    assert response.status_code == HTTPStatus.OK
    body = response.json()
    assert body['kind'] == 'value'
    assert body['value'] == '2'


def test_apply_route_bad_literal(client):
    response = client.post(
        f'{API_PREFIX}/erecursion/apply', json={'e': '{', 'args': ['2']}
    )
    assert response.status_code == HTTPStatus.BAD_REQUEST


def test_apply_route_rejects_zero_fuel(client):
    response = client.post(
        f'{API_PREFIX}/erecursion/apply',
        json={'e': '1', 'args': ['2'], 'fuel': 0},
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY


def test_run_route(client):
    response = client.post(
        f'{API_PREFIX}/erecursion/run',
        json={
            'term': '(app (idx k) (var x) (const 3))',
            'env': {'x': '2'},
        },
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json()['value'] == '2'


def test_run_route_unbound_variable(client):
    response = client.post(
        f'{API_PREFIX}/erecursion/run',
        json={'term': '(app (idx k) (var y) (const 3))'},
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert response.json() == {'detail': 'Unbound variable: y'}


def test_run_route_timeout(client):
    response = client.post(
        f'{API_PREFIX}/erecursion/run',
        json={'term': to_sexpr(omega_term()), 'fuel': 20},
    )
    assert response.status_code == HTTPStatus.OK
    body = response.json()
    assert body['kind'] == 'timeout'
    assert body['spent'] == 20


def test_run_route_powerset_mode(client):
    term = to_sexpr(WApp(subset_family_term(), WConst(ONE)))
    plain = client.post(f'{API_PREFIX}/erecursion/run', json={'term': term})
    assert plain.json()['kind'] == 'apply-error'
    assert plain.json()['detail'] == POWERSET_MODE
    powered = client.post(
        f'{API_PREFIX}/erecursion/run', json={'term': term, 'pmode': True}
    )
    assert powered.json()['kind'] == 'value'
