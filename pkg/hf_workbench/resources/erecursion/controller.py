from http import HTTPStatus

from fastapi import APIRouter

from hf_workbench.resources.erecursion.machine import (
    apply_all,
    eval_closed_term,
)
from hf_workbench.resources.erecursion.model import free_vars, substitute
from hf_workbench.resources.erecursion.parser import parse_wterm
from hf_workbench.resources.erecursion.repository import (
    index_table,
    to_outcome_out,
)
from hf_workbench.resources.erecursion.schemas import (
    ApplyIn,
    IndexTableOut,
    OutcomeOut,
    RunIn,
)
from hf_workbench.resources.hfset.literal import parse_literal
from hf_workbench.resources.shared.dependencies import http_error
from hf_workbench.resources.shared.errors import (
    UnboundVariable,
    WorkbenchError,
)
from hf_workbench.settings import get_settings

settings = get_settings()

router = APIRouter(
    tags=['E-recursion'], prefix=f'{settings.API_PREFIX}/erecursion'
)


@router.get(
    '/indices', response_model=IndexTableOut, status_code=HTTPStatus.OK
)
def get_index_table():
    """Index numerals and arities, as used on the wire."""
    return index_table()


@router.post(
    '/apply',
    response_model=OutcomeOut,
    status_code=HTTPStatus.OK,
    responses={
        200: {
            'description': 'Outcome of the application',
            'content': {
                'application/json': {
                    'example': {'kind': 'value', 'value': '2'}
                }
            },
        },
        400: {
            'description': 'Malformed HF literal',
            'content': {
                'application/json': {
                    'example': {
                        'detail': 'Unexpected end of literal at offset 1'
                    }
                }
            },
        },
    },
)
def apply_index(dto: ApplyIn):
    """
    Applies a set to arguments in the E-recursion machine.

    Args:
        dto (ApplyIn): The applied set, its arguments as HF literals, the
            fuel and whether the powerset clause is active.

    Returns:
        OutcomeOut: A value, a timeout with the fuel spent, an
            application error or the non-finitary marker.
    """
    try:
        e = parse_literal(dto.e)
        args = [parse_literal(a) for a in dto.args]
    except WorkbenchError as error:
        raise http_error(error)
    return to_outcome_out(apply_all(e, args, dto.fuel, dto.pmode))


@router.post('/run', response_model=OutcomeOut, status_code=HTTPStatus.OK)
def run_term(dto: RunIn):
    try:
        env = {name: parse_literal(v) for name, v in dto.env.items()}
        term = substitute(parse_wterm(dto.term), env)
        for name in sorted(free_vars(term)):
            raise UnboundVariable(name)
    except WorkbenchError as error:
        raise http_error(error)
    return to_outcome_out(eval_closed_term(term, dto.fuel, dto.pmode))
