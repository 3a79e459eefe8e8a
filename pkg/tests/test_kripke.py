from http import HTTPStatus

import pytest

from hf_workbench.resources.formula.model import (
    BForall,
    Imp,
    In,
    UForall,
    Var,
)
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.hfset.model import numeral
from hf_workbench.resources.kripke.checks import (
    check_classical,
    check_counterexample,
    check_frame_persistence,
)
from hf_workbench.resources.kripke.examples import (
    all_frames,
    chains,
    decorations,
    forcing_corpus,
    from_transitive_set,
)
from hf_workbench.resources.kripke.forcing import (
    Forcing,
    check_persistence,
    check_truncation,
    failing_nodes,
    forces,
    unfold,
    valid_in_model,
)
from hf_workbench.resources.kripke.model import (
    Frame,
    KripkeModel,
    NodeStructure,
)
from hf_workbench.resources.kripke.repository import (
    dump_model,
    load_model,
    to_file,
)
from hf_workbench.resources.kripke.schemas import (
    INVALID_MODEL,
    MISSING_TRANSITION,
    NOT_REFLEXIVE,
    UNKNOWN_CONSTANT,
)
from hf_workbench.resources.kripke.validate import require_valid, validate
from hf_workbench.resources.shared.errors import InvalidModel
from hf_workbench.settings import get_settings

API_PREFIX = get_settings().API_PREFIX

AB = {'a': 'a', 'b': 'b'}


def test_two_node_model_is_valid(two_node):
    report = validate(two_node)
    assert report.ok, report.violations
    assert report.details['nodes'] == 2


def test_root_does_not_decide_equality(
    two_node, decidable_equality, double_negated_equality
):
    forcing = Forcing(two_node)
    assert not forcing.forces('0', decidable_equality, AB)
    assert forcing.forces('0', double_negated_equality, AB)
    assert forcing.forces('1', decidable_equality, AB)


def test_closed_formula_fails_only_at_root(two_node):
    phi = parse('All a. All b. a = b | ~a = b')
    assert failing_nodes(two_node, phi) == ['0']
    assert not valid_in_model(two_node, phi)
    assert valid_in_model(two_node.truncate('1'), phi)


def test_negation_is_forced_nowhere_below_equality(two_node):
    assert not forces(two_node, '0', parse('~a = b'), AB)
    assert not forces(two_node, '1', parse('~a = b'), AB)


def test_existential_is_witnessed_at_the_node(two_node):
    assert forces(two_node, '0', parse('Some x. x = a'), AB)
    assert not forces(two_node, '0', parse('Some x. ~x = x'), AB)


def test_counterexample_battery():
    report = check_counterexample()
    assert report.ok, report.violations
    assert report.checked == 3


def test_one_node_models_are_classical():
    report = check_classical(max_trcl=2)
    assert report.ok, report.violations
    assert report.checked > 0


def test_persistence_on_two_node_model(two_node):
    report = check_persistence(two_node, forcing_corpus())
    assert report.ok, report.violations
    assert check_truncation(two_node, forcing_corpus()).ok


def test_persistence_over_small_frames():
    report = check_frame_persistence(2)
    assert report.ok, report.violations
    assert report.details['frames'] == 5


def test_all_frames_are_preorders():
    frames = list(all_frames(3))
    assert len(frames) == 1 + 4 + 29
    for frame in frames:
        assert all(frame.accessible(p, p) for p in frame.nodes)


def test_decorations_are_valid():
    for m in decorations(chains(2)):
        assert validate(m).ok


def test_preorder_closes_edges():
    frame = chains(3)
    assert frame.accessible('0', '2')
    assert not frame.accessible('2', '0')
    assert frame.roots() == ('0',)
    assert frame.cone('1') == ('1', '2')


def test_cone_of_unknown_node():
    with pytest.raises(InvalidModel):
        chains(2).cone('9')


def test_truncation_keeps_the_cone(two_node):
    cone = two_node.truncate('1')
    assert cone.frame.nodes == ('1',)
    assert validate(cone).ok


def test_missing_reflexive_edge_is_reported():
    m = KripkeModel(
        frame=Frame(('0',), frozenset()),
        structures={'0': NodeStructure(domain=('a',))},
    )
    report = validate(m)
    assert f'{NOT_REFLEXIVE}: 0' in report.violations


def test_missing_transition_is_reported():
    m = KripkeModel(
        frame=chains(2),
        structures={
            '0': NodeStructure(domain=('a',)),
            '1': NodeStructure(domain=('a',)),
        },
    )
    report = validate(m)
    assert any(v.startswith(MISSING_TRANSITION) for v in report.violations)
    with pytest.raises(InvalidModel) as error:
        require_valid(m)
    assert error.value.message == INVALID_MODEL
    assert error.value.violations == report.violations


def test_transition_must_preserve_equality():
    m = KripkeModel(
        frame=chains(2),
        structures={
            '0': NodeStructure(
                domain=('a', 'b'), classes=(frozenset({'a', 'b'}),)
            ),
            '1': NodeStructure(domain=('a', 'b')),
        },
        transitions={('0', '1'): {'a': 'a', 'b': 'b'}},
    )
    assert not validate(m).ok
    with pytest.raises(InvalidModel):
        Forcing(m)


def test_constants_name_elements():
    m = from_transitive_set(numeral(2))
    assert forces(m, '0', parse('0 in 1'))
    assert forces(m, '0', parse('a in b'), {'a': '0', 'b': '1'})
    with pytest.raises(InvalidModel, match=UNKNOWN_CONSTANT):
        forces(m, '0', parse('2 in 1'))


def test_unfold_bounded_quantifier():
    phi = BForall('x', Var('b'), In(Var('x'), Var('a')))
    assert unfold(phi) == UForall(
        'x', Imp(In(Var('x'), Var('b')), In(Var('x'), Var('a')))
    )


def test_model_file_round_trip(tmp_path, two_node, two_node_file):
    assert load_model(two_node_file) == two_node
    path = tmp_path / 'copy.json'
    dump_model(two_node, path)
    assert load_model(path) == two_node


def test_validate_route(client, two_node):
    response = client.post(
        f'{API_PREFIX}/kripke/validate',
        json=to_file(two_node).model_dump(mode='json'),
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json()['valid'] is True


def test_forces_route(client, two_node):
    response = client.post(
        f'{API_PREFIX}/kripke/forces',
        json={
            'model': to_file(two_node).model_dump(mode='json'),
            'node': '0',
            'text': 'a = b | ~a = b',
            'assignment': AB,
        },
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json() == {
        'node': '0',
        'text': 'a = b | ~a = b',
        'forced': False,
    }


def test_forces_route_invalid_model(client):
    model = {
        'nodes': ['0'],
        'edges': [],
        'domains': {'0': ['a']},
    }
    response = client.post(
        f'{API_PREFIX}/kripke/forces',
        json={'model': model, 'node': '0', 'text': 'false'},
    )
    assert response.status_code == HTTPStatus.UNPROCESSABLE_ENTITY
    assert response.json() == {'detail': INVALID_MODEL}


def test_valid_route(client, two_node):
    response = client.post(
        f'{API_PREFIX}/kripke/valid',
        json={
            'model': to_file(two_node).model_dump(mode='json'),
            'text': 'All a. All b. a = b | ~a = b',
        },
    )
    assert response.status_code == HTTPStatus.OK
    assert response.json()['failing_nodes'] == ['0']


def test_two_node_example_route(client, two_node):
    response = client.get(f'{API_PREFIX}/kripke/examples/two-node')
    assert response.status_code == HTTPStatus.OK
    assert response.json() == to_file(two_node).model_dump(mode='json')
