from http import HTTPStatus

import pytest

from hf_workbench.resources.erecursion.catalog import (
    identity_value,
    self_apply_term,
    subset_family_term,
)
from hf_workbench.resources.erecursion.enums import Index
from hf_workbench.resources.erecursion.machine import eval_closed_term
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import hf, numeral, pair
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.realizability.audit import (
    check_budget_monotonicity,
    check_variant_containment,
    truth_audit,
)
from hf_workbench.resources.realizability.checker import (
    check_w,
    check_wp,
    check_wt,
    search_universe,
)
from hf_workbench.resources.realizability.corpus import (
    Triple,
    constant,
    stock_corpus,
    term_value,
)
from hf_workbench.resources.realizability.enums import (
    UnknownReason,
    VerdictKind,
)
from hf_workbench.resources.realizability.model import (
    BEYOND_SEARCH,
    NOT_REALIZED,
    OUT_OF_FUEL,
    REALIZED,
    every,
    implies,
)
from hf_workbench.resources.realizability.schemas import (
    AUDIT_NEEDS_BOUNDED,
    SURROGATE,
)
from hf_workbench.resources.shared.errors import NotSigma0
from hf_workbench.settings import get_settings

API_PREFIX = get_settings().API_PREFIX

ZERO, ONE, TWO, THREE = (numeral(n) for n in range(4))

CORPUS = stock_corpus()

SUBSET_CLAIM = 'all x in 2. some y sub x. y = y'


def test_stock_corpus_size():
    assert len(CORPUS) == 35


@pytest.mark.parametrize(
    'triple', CORPUS, ids=[f'{i}:{t.text}' for i, t in enumerate(CORPUS)]
)
def test_stock_corpus_verdicts(triple):
    verdict = check_wt(triple.realizer, triple.formula, triple.env)
    assert verdict.kind == triple.expected


def test_conjunction_of_verdicts():
    assert every([REALIZED, OUT_OF_FUEL, NOT_REALIZED]) == NOT_REALIZED
    assert every([REALIZED, BEYOND_SEARCH, OUT_OF_FUEL]) == BEYOND_SEARCH
    assert every([]) == REALIZED


def test_implication_of_verdicts():
    assert implies(NOT_REALIZED, OUT_OF_FUEL) == REALIZED
    assert implies(REALIZED, OUT_OF_FUEL) == OUT_OF_FUEL
    assert implies(OUT_OF_FUEL, NOT_REALIZED) == OUT_OF_FUEL
    assert implies(OUT_OF_FUEL, REALIZED) == REALIZED


def test_search_universe_sizes():
    assert len(search_universe(0)) == 1
    assert len(search_universe(1)) == 2
    assert len(search_universe(2)) == 4


def test_unbounded_universal_is_search_relative():
    phi = parse('All x. x = x')
    verdict = check_wt(identity_value(), phi)
    assert verdict == BEYOND_SEARCH
    assert verdict.reason == UnknownReason.SEARCH_BOUND
    assert check_wt(identity_value(), phi, closed_world=True) == REALIZED


def test_unbounded_existential_needs_a_witness():
    phi = parse('Some x. x = 0')
    assert check_wt(hf(pair(ZERO, ZERO)), phi) == REALIZED
    assert check_wt(hf(pair(ONE, ZERO)), phi) == NOT_REALIZED


def test_implication_closed_world():
    phi = parse('0 in 1 -> 0 in 2')
    assert check_wt(constant(ZERO), phi) == BEYOND_SEARCH
    assert check_wt(constant(ZERO), phi, closed_world=True) == REALIZED


def test_divergent_realizer_runs_out_of_fuel():
    self_apply = eval_closed_term(self_apply_term()).value
    verdict = check_wt(
        self_apply,
        parse('all x in y. x = x'),
        Env({'y': hf(self_apply)}),
        fuel=50,
    )
    assert verdict == OUT_OF_FUEL


def test_non_finitary_application_is_unknown():
    verdict = check_wt(Index.OMEGA.code, parse('all x in 1. x = x'))
    assert verdict == BEYOND_SEARCH


def test_powerset_variant_realizes_subset_family():
    realizer = term_value(subset_family_term())
    phi = parse(SUBSET_CLAIM)
    assert check_wp(realizer, phi) == REALIZED
    assert check_wt(realizer, phi) == NOT_REALIZED
    assert check_w(realizer, phi) == NOT_REALIZED


def test_w_drops_the_truth_conjunct():
    phi = parse('1 in 0 -> 0 in 0')
    assert check_w(ZERO, phi) == REALIZED
    assert check_wt(ZERO, phi) == REALIZED


def test_truth_audit():
    report = truth_audit(CORPUS)
    assert report.ok, report.violations
    assert report.checked == len(CORPUS)
    assert report.details['interpretation'] == SURROGATE
    assert len(report.details['entries']) == len(CORPUS)


def test_truth_audit_entries_carry_literals():
    report = truth_audit([Triple(pair(ZERO, ZERO), '0 in 1 & 1 in 2')])
    (entry,) = report.details['entries']
    assert entry == {
        'realizer': '<0,0>',
        'formula': '0 in 1 & 1 in 2',
        'env': {},
        'verdict': VerdictKind.REALIZED,
        'truth': True,
    }


def test_truth_audit_rejects_unbounded_formula():
    with pytest.raises(NotSigma0, match=AUDIT_NEEDS_BOUNDED):
        truth_audit([Triple(ZERO, 'All x. x = x')])


def test_variant_containment():
    report = check_variant_containment(CORPUS)
    assert report.ok, report.violations
    assert report.checked > 0


def test_budget_monotonicity():
    report = check_budget_monotonicity(CORPUS, fuel=500, search_rank=1)
    assert report.ok, report.violations


def test_check_route(client):
    response = client.post(
        f'{API_PREFIX}/realizability/check',
        json={'realizer': '0', 'formula': '0 in 1'},
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {
        'kind': 'realized',
        'reason': None,
        'variant': 'wt',
        'search_relative': False,
        'interpretation': SURROGATE,
    }


def test_check_route_search_bound(client):
    response = client.post(
        f'{API_PREFIX}/realizability/check',
        json={
            'realizer': to_literal(identity_value()),
            'formula': 'All x. x = x',
            'search_rank': 1,
        },
    )
    assert response.status_code == HTTPStatus.OK
    body = response.json()
    assert body['kind'] == VerdictKind.UNKNOWN.value
    assert body['reason'] == UnknownReason.SEARCH_BOUND.value


def test_check_route_powerset_variant(client):
    response = client.post(
        f'{API_PREFIX}/realizability/check',
        json={
            'realizer': to_literal(term_value(subset_family_term())),
            'formula': SUBSET_CLAIM,
            'variant': 'wp',
        },
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json()['kind'] == 'realized'


def test_check_route_syntax_error(client):
    response = client.post(
        f'{API_PREFIX}/realizability/check',
        json={'realizer': '0', 'formula': '0 in'},
    )
    assert response.status_code == HTTPStatus.BAD_REQUEST


def test_check_route_search_rank_limit(client):
    response = client.post(
        f'{API_PREFIX}/realizability/check',
        json={'realizer': '0', 'formula': '0 in 1', 'search_rank': 5},
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY


def test_audit_route(client):
    response = client.get(f'{API_PREFIX}/realizability/audit')
    assert response.status_code == HTTPStatus.OK
    body = response.json()
    assert body['ok'] is True
    assert len(body['entries']) == len(CORPUS)
