from pathlib import Path

from hf_workbench.resources.erecursion.enums import INDEX_ORDER
from hf_workbench.resources.erecursion.model import (
    ApplyError,
    NonFinitary,
    Outcome,
    Timeout,
    Value,
    WTerm,
)
from hf_workbench.resources.erecursion.parser import parse_wterm
from hf_workbench.resources.erecursion.schemas import (
    IndexOut,
    IndexTableOut,
    OutcomeOut,
)
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.settings import get_settings


def index_table() -> IndexTableOut:
    return IndexTableOut(
        version=get_settings().INDEX_TABLE_VERSION,
        indices=[
            IndexOut(name=index, number=index.number, arity=index.arity)
            for index in INDEX_ORDER
        ],
    )


def dump_index_table(path: Path) -> None:
    path.write_text(index_table().model_dump_json(indent=2))


def load_term(path: Path) -> WTerm:
    return parse_wterm(path.read_text())


def to_outcome_out(outcome: Outcome) -> OutcomeOut:
    match outcome:
        case Value(value):
            return OutcomeOut(kind=outcome.kind, value=to_literal(value))
        case Timeout(spent):
            return OutcomeOut(kind=outcome.kind, spent=spent)
        case ApplyError(detail):
            return OutcomeOut(kind=outcome.kind, detail=detail)
        case NonFinitary():
            return OutcomeOut(kind=outcome.kind, detail=outcome.describe())
    raise TypeError(f'Unknown outcome {outcome!r}')
