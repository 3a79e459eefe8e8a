from http import HTTPStatus

from fastapi import APIRouter

from hf_workbench.resources.formula.analysis import classify, relativize
from hf_workbench.resources.formula.model import Formula, depth, free_vars
from hf_workbench.resources.formula.parser import parse, parse_term
from hf_workbench.resources.formula.printer import to_text
from hf_workbench.resources.formula.schemas import (
    FormulaIn,
    FormulaOut,
    RelativizeIn,
)
from hf_workbench.resources.shared.dependencies import http_error
from hf_workbench.resources.shared.errors import WorkbenchError
from hf_workbench.settings import get_settings

settings = get_settings()

router = APIRouter(
    tags=['Formulas'], prefix=f'{settings.API_PREFIX}/formulas'
)


def to_formula_out(phi: Formula) -> FormulaOut:
    return FormulaOut(
        text=to_text(phi),
        classification=classify(phi),
        free_vars=free_vars(phi),
        depth=depth(phi),
    )


@router.post(
    '/parse',
    response_model=FormulaOut,
    status_code=HTTPStatus.OK,
    responses={
        200: {
            'description': 'Formula parsed, classified and reprinted',
            'content': {
                'application/json': {
                    'example': {
                        'text': 'all y in x1. y in x2',
                        'classification': 'SIGMA0',
                        'free_vars': ['x1', 'x2'],
                        'depth': 1,
                    }
                }
            },
        },
        400: {
            'description': 'Syntax error',
            'content': {
                'application/json': {
                    'example': {
                        'detail': "Expected 'in' or '=', found \")\" "
                        '(line 1, column 4)'
                    }
                }
            },
        },
    },
)
def parse_formula(dto: FormulaIn):
    """
    Parses a formula of the bounded set language.

    Args:
        dto (FormulaIn): Formula text such as `all x in a. x in b`.

    Returns:
        FormulaOut: Canonical text, classification, free variables, depth.
    """
    try:
        return to_formula_out(parse(dto.text))
    except WorkbenchError as error:
        raise http_error(error)


@router.post(
    '/relativize', response_model=FormulaOut, status_code=HTTPStatus.OK
)
def relativize_formula(dto: RelativizeIn):
    try:
        phi = parse(dto.text)
        return to_formula_out(relativize(phi, parse_term(dto.bound)))
    except WorkbenchError as error:
        raise http_error(error)
