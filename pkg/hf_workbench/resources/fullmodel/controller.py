from http import HTTPStatus

from fastapi import APIRouter

from hf_workbench.resources.fullmodel.checks import PROPERTY_CHECKS
from hf_workbench.resources.fullmodel.coding import (
    delta_decode,
    delta_encode,
)
from hf_workbench.resources.fullmodel.enums import NameProperty
from hf_workbench.resources.fullmodel.names import one_p
from hf_workbench.resources.fullmodel.schemas import (
    BuildIn,
    BuildOut,
    CheckOut,
    DeltaIn,
    DeltaOut,
    FrameFile,
)
from hf_workbench.resources.fullmodel.universe import build_universe
from hf_workbench.resources.kripke.examples import chains
from hf_workbench.resources.kripke.model import Frame
from hf_workbench.resources.shared.dependencies import http_error
from hf_workbench.resources.shared.errors import WorkbenchError
from hf_workbench.settings import get_settings

settings = get_settings()

router = APIRouter(
    tags=['Full model'], prefix=f'{settings.API_PREFIX}/fullmodel'
)


def to_frame(data: FrameFile) -> Frame:
    return Frame.preorder(data.nodes, data.edges)


@router.post(
    '/universe',
    response_model=BuildOut,
    status_code=HTTPStatus.OK,
    responses={
        200: {
            'description': 'Names counted per node',
            'content': {
                'application/json': {
                    'example': {'cutoff': 2, 'counts': {'0': 3, '1': 2}}
                }
            },
        },
        413: {
            'description': 'Name universe exceeds the configured budget',
            'content': {
                'application/json': {
                    'example': {
                        'detail': 'Name universe exceeds the configured '
                        'budget: 50000'
                    }
                }
            },
        },
    },
)
def build_names(dto: BuildIn):
    """
    Generates every name of stage below the cutoff.

    Args:
        dto (BuildIn): The frame and the cutoff.

    Returns:
        BuildOut: Number of names at each node.
    """
    try:
        universe = build_universe(to_frame(dto.frame), dto.cutoff)
    except WorkbenchError as error:
        raise http_error(error)
    return BuildOut(
        cutoff=dto.cutoff,
        counts={p: len(names) for p, names in universe.items()},
    )


@router.post('/delta', response_model=DeltaOut, status_code=HTTPStatus.OK)
def code_bits(dto: DeltaIn):
    frame = chains(2)
    try:
        alpha_name = one_p(frame, dto.alpha_node)
        bits = [int(b) for b in dto.bits]
        delta = delta_encode(bits, alpha_name)
        decoded = delta_decode(delta, alpha_name, len(bits))
    except WorkbenchError as error:
        raise http_error(error)
    return DeltaOut(
        bits=dto.bits,
        decoded=''.join(str(b) for b in decoded),
        name=delta.dump(),
    )


@router.get(
    '/checks/{prop}', response_model=CheckOut, status_code=HTTPStatus.OK
)
def run_check(prop: NameProperty):
    """Runs one name-level property check on the two-node chain."""
    try:
        report = PROPERTY_CHECKS[prop](chains(2))
    except WorkbenchError as error:
        raise http_error(error)
    return CheckOut(ok=report.ok, report=report)
