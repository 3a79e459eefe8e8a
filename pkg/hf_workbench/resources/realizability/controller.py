from http import HTTPStatus

from fastapi import APIRouter

from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.hfset.literal import parse_literal
from hf_workbench.resources.oracle.model import Env
from hf_workbench.resources.realizability.audit import truth_audit
from hf_workbench.resources.realizability.checker import (
    CHECKERS,
    search_universe,
)
from hf_workbench.resources.realizability.corpus import stock_corpus
from hf_workbench.resources.realizability.schemas import (
    AuditOut,
    CheckIn,
    VerdictOut,
)
from hf_workbench.resources.shared.dependencies import http_error
from hf_workbench.resources.shared.errors import WorkbenchError
from hf_workbench.settings import get_settings

settings = get_settings()

router = APIRouter(
    tags=['Realizability'], prefix=f'{settings.API_PREFIX}/realizability'
)


@router.post(
    '/check',
    response_model=VerdictOut,
    status_code=HTTPStatus.OK,
    responses={
        200: {
            'description': 'Three-valued verdict',
            'content': {
                'application/json': {
                    'example': {
                        'kind': 'unknown',
                        'reason': 'search-bound',
                        'variant': 'wt',
                        'search_relative': False,
                        'interpretation': 'bounded-search',
                    }
                }
            },
        },
        400: {
            'description': 'Malformed formula',
            'content': {
                'application/json': {
                    'example': {
                        'detail': 'Unexpected token "?" (line 1, column 3)'
                    }
                }
            },
        },
    },
)
def check_realizer(dto: CheckIn):
    """
    Decides whether a set realizes a formula, within a budget.

    Args:
        dto (CheckIn): Realizer literal, formula text, assignment, the
            variant and the fuel and search budgets.

    Returns:
        VerdictOut: Realized, NotRealized, or Unknown with the exhausted
            resource.
    """
    try:
        realizer = parse_literal(dto.realizer)
        phi = parse(dto.formula)
        env = Env({k: parse_literal(v) for k, v in dto.env.items()})
        verdict = CHECKERS[dto.variant](
            realizer,
            phi,
            env,
            fuel=dto.fuel,
            search=search_universe(dto.search_rank),
            closed_world=dto.closed_world,
        )
    except WorkbenchError as error:
        raise http_error(error)
    return VerdictOut(
        kind=verdict.kind,
        reason=verdict.reason,
        variant=dto.variant,
        search_relative=dto.closed_world,
    )


@router.get('/audit', response_model=AuditOut, status_code=HTTPStatus.OK)
def audit_corpus():
    """Truth audit of the stock corpus under ⊩wt."""
    report = truth_audit(stock_corpus())
    return AuditOut(
        ok=report.ok,
        violations=report.violations,
        entries=report.details['entries'],
    )
