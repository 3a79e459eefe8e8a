from http import HTTPStatus

from fastapi import HTTPException

from hf_workbench.resources.shared.errors import (
    BudgetExceeded,
    EmptyTuple,
    FormulaSyntaxError,
    LiteralSyntaxError,
    TermSyntaxError,
    UnboundVariable,
    WorkbenchError,
)

_BAD_REQUEST = (
    LiteralSyntaxError,
    FormulaSyntaxError,
    TermSyntaxError,
    UnboundVariable,
    EmptyTuple,
)


def http_error(error: WorkbenchError) -> HTTPException:
    if isinstance(error, _BAD_REQUEST):
        status_code = HTTPStatus.BAD_REQUEST
    elif isinstance(error, BudgetExceeded):
        status_code = HTTPStatus.REQUEST_ENTITY_TOO_LARGE
    else:
        status_code = HTTPStatus.UNPROCESSABLE_ENTITY
    return HTTPException(status_code=status_code, detail=error.message)
