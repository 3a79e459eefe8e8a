from http import HTTPStatus

from fastapi import APIRouter

from hf_workbench.resources.compiler.compiler import (
    compile_comprehension,
    compile_separation,
    stage_bound,
)
from hf_workbench.resources.compiler.model import CompilationResult
from hf_workbench.resources.compiler.schemas import (
    CompilationOut,
    CompileIn,
    SeparationIn,
    StageBoundIn,
    StageBoundOut,
)
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.formula.printer import to_text
from hf_workbench.resources.operations.model import (
    term_depth,
    term_size,
    to_sexpr,
)
from hf_workbench.resources.shared.dependencies import http_error
from hf_workbench.resources.shared.errors import WorkbenchError
from hf_workbench.settings import get_settings

settings = get_settings()

router = APIRouter(
    tags=['Compiler'], prefix=f'{settings.API_PREFIX}/compiler'
)


def to_compilation_out(result: CompilationResult) -> CompilationOut:
    return CompilationOut(
        term=to_sexpr(result.term),
        var_order=list(result.var_order),
        parameter=result.parameter,
        stage_bound=result.stage_bound,
        depth=term_depth(result.term),
        size=term_size(result.term),
    )


@router.post(
    '/comprehension',
    response_model=CompilationOut,
    status_code=HTTPStatus.OK,
    responses={
        200: {
            'description': 'Comprehension term for the formula',
            'content': {
                'application/json': {
                    'example': {
                        'term': '(in (var x1) (var x2))',
                        'var_order': ['x1', 'x2'],
                        'parameter': None,
                        'stage_bound': 3,
                        'depth': 1,
                        'size': 3,
                    }
                }
            },
        },
        422: {
            'description': 'Formula is not Σ₀',
            'content': {
                'application/json': {
                    'example': {
                        'detail': 'Only Σ₀ formulas (∈-bounded '
                        'quantifiers) can be compiled'
                    }
                }
            },
        },
    },
)
def compile_formula(dto: CompileIn):
    """
    Compiles a Σ₀ formula into its comprehension term.

    Args:
        dto (CompileIn): Formula text and the variable order x1..xn.

    Returns:
        CompilationOut: The term as an s-expression with its stage bound.
    """
    try:
        return to_compilation_out(
            compile_comprehension(parse(dto.text), dto.vars)
        )
    except WorkbenchError as error:
        raise http_error(error)
    except ValueError as error:
        raise http_error(WorkbenchError(str(error)))


@router.post(
    '/separation', response_model=CompilationOut, status_code=HTTPStatus.OK
)
def compile_separation_term(dto: SeparationIn):
    try:
        return to_compilation_out(
            compile_separation(parse(dto.text), dto.position, dto.vars)
        )
    except WorkbenchError as error:
        raise http_error(error)
    except ValueError as error:
        raise http_error(WorkbenchError(str(error)))


@router.post(
    '/stage-bound', response_model=StageBoundOut, status_code=HTTPStatus.OK
)
def get_stage_bound(dto: StageBoundIn):
    try:
        phi = parse(dto.text)
        return StageBoundOut(text=to_text(phi), stage_bound=stage_bound(phi))
    except WorkbenchError as error:
        raise http_error(error)
