from http import HTTPStatus

import pytest

from hf_workbench.resources.hfset.model import (
    EMPTY,
    HFSet,
    hf,
    numeral,
    powerset,
)
from hf_workbench.resources.hierarchy import checks as hierarchy_checks
from hf_workbench.resources.hierarchy.checks import (
    check_alpha_star,
    check_comparison,
    check_hered_add,
    check_stage_properties,
    check_witness_chains,
    transitive_sets,
)
from hf_workbench.resources.hierarchy.closure import (
    HierarchyBuilder,
    closure_cost,
)
from hf_workbench.resources.hierarchy.definable import (
    DefinableEnumerator,
    def_subsets,
    definable_witnesses,
    extension,
)
from hf_workbench.resources.hierarchy.model import StageIndex
from hf_workbench.resources.hierarchy.repository import StageRepository
from hf_workbench.resources.hierarchy.schemas import (
    NOT_AN_ORDINAL,
    NOT_TRANSITIVE,
    WITNESS_MISMATCH,
)
from hf_workbench.resources.hierarchy.stages import (
    alpha_star,
    alpha_star_k,
    hered_add,
    hered_add_minus,
    ll_membership_witness,
    verify_witness,
)
from hf_workbench.resources.shared.errors import (
    StageTooLarge,
    WitnessMismatch,
)
from hf_workbench.resources.shared.schemas import Budget
from hf_workbench.settings import get_settings

API_PREFIX = get_settings().API_PREFIX

ZERO, ONE, TWO, THREE = (numeral(n) for n in range(4))


def fresh_builder(**overrides) -> HierarchyBuilder:
    return HierarchyBuilder(
        Budget.from_settings(**overrides), repository=StageRepository()
    )


def test_first_stages():
    builder = fresh_builder()
    assert builder.ll_level(ZERO) is EMPTY
    assert builder.ll_level(ONE) is TWO
    assert builder.stats.ops_applied == 13


def test_stages_are_memoized():
    builder = fresh_builder()
    first = builder.ll_level(TWO)
    applied = builder.stats.ops_applied
    assert builder.ll_level(TWO) is first
    assert builder.stats.ops_applied == applied


def test_stages_grow():
    builder = fresh_builder()
    smaller, larger = builder.ll_level(ONE), builder.ll_level(TWO)
    assert smaller <= larger
    assert smaller in larger
    assert builder.stats.sizes['1'] == 2


def test_closure_cost():
    assert closure_cost(2) == 52
    assert closure_cost(2, with_aux=True) == 84


def test_stage_over_element_budget():
    builder = fresh_builder(elems=3)
    with pytest.raises(StageTooLarge) as error:
        builder.ll_level(TWO)
    assert isinstance(error.value.partial, HFSet)


def test_stage_over_operation_budget():
    builder = fresh_builder(ops=10)
    with pytest.raises(StageTooLarge):
        builder.ll_level(ONE)


def test_def_truncations_increase():
    levels = fresh_builder().def_truncated(TWO, 2)
    assert len(levels) == 3
    assert levels[0] is TWO
    assert levels[0] <= levels[1] <= levels[2]


def test_def_truncation_keeps_partial_levels():
    builder = fresh_builder(elems=4)
    with pytest.raises(StageTooLarge) as error:
        builder.def_truncated(ONE, 3)
    assert error.value.partial[0] is ONE


def test_stage_index_requires_ordinal():
    assert StageIndex.of(3).value == 3
    with pytest.raises(ValueError, match=NOT_AN_ORDINAL):
        StageIndex(hf(ONE))


@pytest.mark.parametrize('n', range(6))
def test_witness_chains_verify(n):
    chain = ll_membership_witness(n)
    assert verify_witness(chain)
    assert chain.target_stage == 2 * n + 1


def test_witness_chain_stages():
    assert ll_membership_witness(0).certified_stage == 1
    assert ll_membership_witness(1).certified_stage == 1
    assert ll_membership_witness(4).certified_stage == 10
    assert len(ll_membership_witness(4).steps) == 10
    assert ll_membership_witness(3).meets_target
    assert not ll_membership_witness(4).meets_target


def test_hereditary_addition():
    assert hered_add_minus(ONE, ONE) is TWO
    assert hered_add(ONE, ONE) is THREE
    assert hered_add(ZERO, ZERO) is ONE


def test_definable_subsets_of_transitive_set():
    assert def_subsets(TWO) is powerset(TWO)
    for found in definable_witnesses(THREE):
        assert extension(found.witness, THREE) is found.subset


def test_definable_requires_transitive_set():
    with pytest.raises(ValueError, match=NOT_TRANSITIVE):
        definable_witnesses(hf(ONE))


def test_transitive_sets():
    assert transitive_sets(2) == [EMPTY, ONE, TWO]


def test_alpha_star_of_one():
    result = alpha_star(ONE, fresh_builder())
    assert result.k == alpha_star_k()
    assert result.candidates is ONE
    assert result.members is ONE
    assert result.stage_equal
    assert result.formula_agrees
    assert not result.undecided


def test_property_batteries():
    builder = fresh_builder()
    for report in (
        check_stage_properties(2, builder),
        check_witness_chains(3, builder),
        check_hered_add(3, 2),
        check_alpha_star((0, 1, 2), builder),
        check_comparison(2, builder=builder),
    ):
        assert report.ok, report.violations
        assert report.checked > 0


class ComplementedMasks(DefinableEnumerator):
    def mask(self, phi):
        return super().mask(phi) ^ self.full


def test_witness_disagreeing_with_its_mask_raises():
    with pytest.raises(WitnessMismatch, match=WITNESS_MISMATCH):
        ComplementedMasks(ONE).run(1)


def test_comparison_records_witness_mismatch(monkeypatch):
    def mismatched(M):
        raise WitnessMismatch(WITNESS_MISMATCH)

    monkeypatch.setattr(hierarchy_checks, 'def_subsets', mismatched)
    report = check_comparison(1, builder=fresh_builder())
    assert report.violations == [WITNESS_MISMATCH, WITNESS_MISMATCH]


def test_stage_battery_lists_stages_over_budget():
    report = check_stage_properties(3, fresh_builder(elems=20))
    assert report.details['over_budget']


def test_witness_battery_flags_chains_above_target():
    report = check_witness_chains(4, fresh_builder(elems=20))
    assert report.violations == ['chain for 4 certifies 10 > 9']


def test_witness_battery_details():
    report = check_witness_chains(4, fresh_builder())
    assert report.details['meets_target'][3] is True
    assert report.details['meets_target'][4] is False


def test_stage_route(client):
    response = client.post(
        f'{API_PREFIX}/hierarchy/stage', json={'alpha': 1}
    )
    assert response.status_code == HTTPStatus.OK
    body = response.json()
    assert body['alpha'] == '1'
    assert body['size'] == 2
    assert sorted(body['members']) == ['0', '1']


def test_stage_route_over_budget(client, small_budget):
    response = client.post(
        f'{API_PREFIX}/hierarchy/stage', json={'alpha': 6}
    )
    assert response.status_code == HTTPStatus.REQUEST_ENTITY_TOO_LARGE


def test_stage_route_negative_index(client):
    response = client.post(
        f'{API_PREFIX}/hierarchy/stage', json={'alpha': -1}
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY


def test_witness_route(client):
    response = client.get(f'{API_PREFIX}/hierarchy/witness/3')
    assert response.status_code == HTTPStatus.OK
    body = response.json()
    assert body['certified_stage'] == 7
    assert body['target_stage'] == 7
    assert body['meets_target'] is True
    assert body['steps'][0] == '(pair (const 0) (const 0))'


def test_closure_route(client):
    response = client.post(
        f'{API_PREFIX}/hierarchy/closure', json={'literal': '1', 'steps': 1}
    )
    assert response.status_code == HTTPStatus.OK
    body = response.json()
    assert body['sizes'][0] == 1
    assert sorted(body['definable_subsets']) == ['0', '1']


def test_alpha_star_route(client):
    response = client.get(f'{API_PREFIX}/hierarchy/alpha-star/1')
    assert response.status_code == HTTPStatus.OK
    body = response.json()
    assert body['members'] == ['0']
    assert body['stage_equal'] is True


def test_definable_route(client):
    response = client.post(
        f'{API_PREFIX}/hierarchy/definable', json={'literal': '2'}
    )
    assert response.status_code == HTTPStatus.OK
    subsets = {item['subset'] for item in response.json()}
    assert subsets == {'0', '1', '<0,0>', '2'}


def test_definable_route_not_transitive(client):
    response = client.post(
        f'{API_PREFIX}/hierarchy/definable', json={'literal': '{1}'}
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert response.json() == {'detail': NOT_TRANSITIVE}
