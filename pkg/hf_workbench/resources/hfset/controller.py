from http import HTTPStatus

from fastapi import APIRouter

from hf_workbench.resources.hfset.literal import parse_literal, to_literal
from hf_workbench.resources.hfset.model import (
    HFSet,
    as_natural,
    is_ordinal,
    project,
    set_algebra,
)
from hf_workbench.resources.hfset.schemas import (
    ProjectIn,
    SetAlgebraIn,
    SetLiteralIn,
    SetOut,
)
from hf_workbench.resources.shared.dependencies import http_error
from hf_workbench.resources.shared.errors import WorkbenchError
from hf_workbench.settings import get_settings

settings = get_settings()

router = APIRouter(tags=['Sets'], prefix=f'{settings.API_PREFIX}/sets')


def to_set_out(x: HFSet) -> SetOut:
    return SetOut(
        literal=to_literal(x),
        rank=x.rank,
        size=len(x),
        is_ordinal=is_ordinal(x),
        natural=as_natural(x),
    )


@router.post(
    '/parse',
    response_model=SetOut,
    status_code=HTTPStatus.OK,
    responses={
        200: {
            'description': 'Literal parsed and printed in canonical form',
            'content': {
                'application/json': {
                    'example': {
                        'literal': '3',
                        'rank': 3,
                        'size': 3,
                        'is_ordinal': True,
                        'natural': 3,
                    }
                }
            },
        },
        400: {
            'description': 'Malformed literal',
            'content': {
                'application/json': {
                    'example': {
                        'detail': 'Unexpected end of literal at offset 3'
                    }
                }
            },
        },
    },
)
def parse_set(dto: SetLiteralIn):
    """
    Parses an HF literal and returns its canonical description.

    Args:
        dto (SetLiteralIn): The literal text, e.g. `{0,{1}}` or `<0,1>`.

    Returns:
        SetOut: Canonical literal, rank, size and ordinal information.
    """
    try:
        return to_set_out(parse_literal(dto.literal))
    except WorkbenchError as error:
        raise http_error(error)


@router.post('/algebra', response_model=SetOut, status_code=HTTPStatus.OK)
def apply_set_algebra(dto: SetAlgebraIn):
    try:
        x = parse_literal(dto.x)
        y = parse_literal(dto.y) if dto.y is not None else None
        return to_set_out(set_algebra(dto.kind, x, y))
    except WorkbenchError as error:
        raise http_error(error)
    except ValueError as error:
        raise http_error(WorkbenchError(str(error)))


@router.post('/project', response_model=SetOut, status_code=HTTPStatus.OK)
def project_pair(dto: ProjectIn):
    try:
        return to_set_out(project(parse_literal(dto.literal), dto.side))
    except WorkbenchError as error:
        raise http_error(error)
