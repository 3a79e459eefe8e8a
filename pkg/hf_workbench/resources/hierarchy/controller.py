from http import HTTPStatus

from fastapi import APIRouter

from hf_workbench.resources.formula.printer import to_text
from hf_workbench.resources.hfset.literal import parse_literal, to_literal
from hf_workbench.resources.hfset.model import as_natural
from hf_workbench.resources.hfset.schemas import SetLiteralIn
from hf_workbench.resources.hierarchy.closure import HierarchyBuilder
from hf_workbench.resources.hierarchy.definable import definable_witnesses
from hf_workbench.resources.hierarchy.model import StageIndex
from hf_workbench.resources.hierarchy.schemas import (
    AlphaStarOut,
    ClosureIn,
    ClosureOut,
    DefinableOut,
    StageIn,
    StageOut,
    WitnessOut,
)
from hf_workbench.resources.hierarchy.stages import (
    alpha_star,
    ll_membership_witness,
)
from hf_workbench.resources.operations.model import to_sexpr
from hf_workbench.resources.shared.dependencies import http_error
from hf_workbench.resources.shared.errors import WorkbenchError
from hf_workbench.settings import get_settings

settings = get_settings()

router = APIRouter(
    tags=['Hierarchy'], prefix=f'{settings.API_PREFIX}/hierarchy'
)

MEMBERS_SHOWN = 64


@router.post(
    '/stage',
    response_model=StageOut,
    status_code=HTTPStatus.OK,
    responses={
        200: {
            'description': 'Stage built within budget',
            'content': {
                'application/json': {
                    'example': {
                        'alpha': '1',
                        'size': 2,
                        'members': ['0', '1'],
                        'ops_applied': 13,
                        'elapsed': 0.001,
                    }
                }
            },
        },
        413: {
            'description': 'Stage exceeds the configured budget',
            'content': {
                'application/json': {
                    'example': {
                        'detail': 'Closure step needs more operation '
                        'applications than allowed: 3000 members'
                    }
                }
            },
        },
    },
)
def build_stage(dto: StageIn):
    """
    Builds 𝕃_α by full enumeration.

    Args:
        dto (StageIn): The ordinal α and whether to add the 𝓖 operations.

    Returns:
        StageOut: Stage size, members when small, and build statistics.
    """
    builder = HierarchyBuilder()
    index = StageIndex.of(dto.alpha)
    try:
        stage = builder.timed_level(index.alpha, dto.with_aux)
    except WorkbenchError as error:
        raise http_error(error)
    members = None
    if len(stage) <= MEMBERS_SHOWN:
        members = [to_literal(x) for x in stage]
    return StageOut(
        alpha=to_literal(index.alpha),
        size=len(stage),
        members=members,
        ops_applied=builder.stats.ops_applied,
        elapsed=builder.stats.elapsed,
    )


@router.get(
    '/witness/{n}', response_model=WitnessOut, status_code=HTTPStatus.OK
)
def get_witness(n: int):
    if n < 0:
        raise http_error(WorkbenchError(f'Not a natural number: {n}'))
    chain = ll_membership_witness(n)
    return WitnessOut(
        n=n,
        steps=[to_sexpr(step.term) for step in chain.steps],
        certified_stage=chain.certified_stage,
        target_stage=chain.target_stage,
        meets_target=chain.meets_target,
    )


@router.post('/closure', response_model=ClosureOut, status_code=HTTPStatus.OK)
def truncate_def(dto: ClosureIn):
    """
    Truncations 𝒟⁰(b) .. 𝒟ᴺ(b) of Def(b), and the subsets of b reached
    by the last one.
    """
    try:
        b = parse_literal(dto.literal)
        levels = HierarchyBuilder().def_truncated(b, dto.steps)
    except WorkbenchError as error:
        raise http_error(error)
    return ClosureOut(
        steps=dto.steps,
        sizes=[len(level) for level in levels],
        definable_subsets=[to_literal(x) for x in levels[-1] if x <= b],
    )


@router.get(
    '/alpha-star/{alpha}',
    response_model=AlphaStarOut,
    status_code=HTTPStatus.OK,
)
def get_alpha_star(alpha: int):
    try:
        result = alpha_star(StageIndex.of(alpha).alpha)
    except WorkbenchError as error:
        raise http_error(error)
    except ValueError as error:
        raise http_error(WorkbenchError(str(error)))
    return AlphaStarOut(
        alpha=alpha,
        k=result.k,
        domain_stage=as_natural(result.domain_stage),
        candidates=[to_literal(g) for g in result.candidates],
        members=[to_literal(g) for g in result.members],
        non_ordinals=[to_literal(g) for g in result.non_ordinals],
        undecided=[to_literal(g) for g in result.undecided],
        stage_equal=result.stage_equal,
        formula_agrees=result.formula_agrees,
    )


@router.post(
    '/definable',
    response_model=list[DefinableOut],
    status_code=HTTPStatus.OK,
)
def get_definable(dto: SetLiteralIn):
    try:
        found = definable_witnesses(parse_literal(dto.literal))
    except WorkbenchError as error:
        raise http_error(error)
    except ValueError as error:
        raise http_error(WorkbenchError(str(error)))
    return [
        DefinableOut(subset=to_literal(d.subset), witness=to_text(d.witness))
        for d in found
    ]