from http import HTTPStatus

from fastapi import APIRouter

from hf_workbench.resources.hfset.literal import parse_literal, to_literal
from hf_workbench.resources.operations.evaluator import (
    eval_aux_g,
    eval_fund,
    eval_term,
)
from hf_workbench.resources.operations.model import (
    parse_op_term,
    term_depth,
    term_size,
    to_sexpr,
)
from hf_workbench.resources.operations.schemas import (
    ARITY_MISMATCH,
    EvalTermIn,
    FundamentalIn,
    TermOut,
    ValueOut,
)
from hf_workbench.resources.shared.dependencies import http_error
from hf_workbench.resources.shared.errors import (
    TermSyntaxError,
    WorkbenchError,
)
from hf_workbench.settings import get_settings

settings = get_settings()

router = APIRouter(
    tags=['Operations'], prefix=f'{settings.API_PREFIX}/operations'
)


@router.post(
    '/apply',
    response_model=ValueOut,
    status_code=HTTPStatus.OK,
    responses={
        200: {
            'description': 'Operation applied',
            'content': {
                'application/json': {'example': {'literal': '{1}'}}
            },
        },
        400: {
            'description': 'Malformed literal or missing third argument',
            'content': {
                'application/json': {
                    'example': {
                        'detail': 'Operation applied to the wrong number '
                        'of arguments: g0'
                    }
                }
            },
        },
    },
)
def apply_operation(dto: FundamentalIn):
    """
    Applies one of the 13 fundamental operations or one of 𝓖₀..𝓖₃.

    Args:
        dto (FundamentalIn): Operation code and HF literal arguments.

    Returns:
        ValueOut: The result as an HF literal.
    """
    try:
        x, y = parse_literal(dto.x), parse_literal(dto.y)
        if dto.code.arity == 2:  # noqa: PLR2004
            return ValueOut(literal=to_literal(eval_fund(dto.code, x, y)))
        if dto.z is None:
            raise TermSyntaxError(f'{ARITY_MISMATCH}: {dto.code.value}')
        z = parse_literal(dto.z)
        return ValueOut(literal=to_literal(eval_aux_g(dto.code, x, y, z)))
    except WorkbenchError as error:
        raise http_error(error)


@router.post('/eval', response_model=ValueOut, status_code=HTTPStatus.OK)
def evaluate_term(dto: EvalTermIn):
    try:
        term = parse_op_term(dto.term)
        env = {name: parse_literal(v) for name, v in dto.env.items()}
        return ValueOut(literal=to_literal(eval_term(term, env)))
    except WorkbenchError as error:
        raise http_error(error)


@router.post('/inspect', response_model=TermOut, status_code=HTTPStatus.OK)
def inspect_term(dto: EvalTermIn):
    try:
        term = parse_op_term(dto.term)
    except WorkbenchError as error:
        raise http_error(error)
    return TermOut(
        term=to_sexpr(term), depth=term_depth(term), size=term_size(term)
    )
