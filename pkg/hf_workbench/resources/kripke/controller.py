from http import HTTPStatus

from fastapi import APIRouter

from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.formula.printer import to_text
from hf_workbench.resources.kripke.examples import two_node_example
from hf_workbench.resources.kripke.forcing import failing_nodes, forces
from hf_workbench.resources.kripke.repository import to_file, to_model
from hf_workbench.resources.kripke.schemas import (
    ForcesIn,
    ForcesOut,
    KripkeModelFile,
    ValidateOut,
    ValidIn,
    ValidOut,
)
from hf_workbench.resources.kripke.validate import validate
from hf_workbench.resources.shared.dependencies import http_error
from hf_workbench.resources.shared.errors import WorkbenchError
from hf_workbench.settings import get_settings

settings = get_settings()

router = APIRouter(tags=['Kripke'], prefix=f'{settings.API_PREFIX}/kripke')


@router.post(
    '/validate', response_model=ValidateOut, status_code=HTTPStatus.OK
)
def validate_model(dto: KripkeModelFile):
    report = validate(to_model(dto))
    return ValidateOut(valid=report.ok, report=report)


@router.post(
    '/forces',
    response_model=ForcesOut,
    status_code=HTTPStatus.OK,
    responses={
        200: {
            'description': 'Forcing decided at the node',
            'content': {
                'application/json': {
                    'example': {
                        'node': '0',
                        'text': 'a = b | ~a = b',
                        'forced': False,
                    }
                }
            },
        },
        422: {
            'description': 'Model is not valid',
            'content': {
                'application/json': {
                    'example': {
                        'detail': 'Kripke model violates its validity '
                        'conditions'
                    }
                }
            },
        },
    },
)
def force_formula(dto: ForcesIn):
    """
    Decides p ⊩ φ for a node of a validated model.

    Args:
        dto (ForcesIn): Model, node, formula text and variable assignment.

    Returns:
        ForcesOut: Whether the node forces the formula.
    """
    try:
        phi = parse(dto.text)
        forced = forces(to_model(dto.model), dto.node, phi, dto.assignment)
    except WorkbenchError as error:
        raise http_error(error)
    return ForcesOut(node=dto.node, text=to_text(phi), forced=forced)


@router.post('/valid', response_model=ValidOut, status_code=HTTPStatus.OK)
def check_validity(dto: ValidIn):
    try:
        phi = parse(dto.text)
        failing = failing_nodes(to_model(dto.model), phi)
    except WorkbenchError as error:
        raise http_error(error)
    return ValidOut(
        text=to_text(phi), valid=not failing, failing_nodes=failing
    )


@router.get(
    '/examples/two-node',
    response_model=KripkeModelFile,
    status_code=HTTPStatus.OK,
)
def get_two_node_example():
    return to_file(two_node_example())
