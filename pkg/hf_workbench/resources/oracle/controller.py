from http import HTTPStatus

from fastapi import APIRouter

from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.formula.printer import to_text
from hf_workbench.resources.hfset.literal import parse_literal, to_literal
from hf_workbench.resources.oracle.evaluator import (
    comprehension,
    eval_formula,
)
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.oracle.schemas import (
    ComprehensionIn,
    ComprehensionOut,
    EvalFormulaIn,
    TruthOut,
)
from hf_workbench.resources.shared.dependencies import http_error
from hf_workbench.resources.shared.errors import WorkbenchError
from hf_workbench.settings import get_settings

settings = get_settings()

router = APIRouter(tags=['Oracle'], prefix=f'{settings.API_PREFIX}/oracle')


@router.post(
    '/eval',
    response_model=TruthOut,
    status_code=HTTPStatus.OK,
    responses={
        200: {
            'description': 'Classical truth value',
            'content': {
                'application/json': {
                    'example': {'text': '0 in 1', 'value': True}
                }
            },
        },
        422: {
            'description': 'Unbounded quantifier without a universe',
            'content': {
                'application/json': {
                    'example': {
                        'detail': 'Unbounded quantifier needs a universe '
                        'bound for brute-force evaluation'
                    }
                }
            },
        },
    },
)
def evaluate_formula(dto: EvalFormulaIn):
    """
    Decides a formula by brute force over HF values.

    Args:
        dto (EvalFormulaIn): Formula text, assignment of literals and an
            optional universe for unbounded quantifiers.

    Returns:
        TruthOut: The reprinted formula and its truth value.
    """
    try:
        phi = parse(dto.text)
        env = Env(
            {name: parse_literal(v) for name, v in dto.env.items()},
            parse_literal(dto.universe) if dto.universe else None,
        )
        return TruthOut(text=to_text(phi), value=eval_formula(phi, env))
    except WorkbenchError as error:
        raise http_error(error)


@router.post(
    '/comprehension',
    response_model=ComprehensionOut,
    status_code=HTTPStatus.OK,
)
def comprehension_set(dto: ComprehensionIn):
    try:
        phi = parse(dto.text)
        args = [parse_literal(a) for a in dto.args]
        result = comprehension(phi, dto.vars, args)
    except WorkbenchError as error:
        raise http_error(error)
    except ValueError as error:
        raise http_error(WorkbenchError(str(error)))
    return ComprehensionOut(literal=to_literal(result), size=len(result))
