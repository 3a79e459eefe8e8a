from hf_workbench.resources.erecursion.enums import Index
from hf_workbench.resources.erecursion.model import (
    Idx,
    WApp,
    WConst,
    WTerm,
    WVar,
    apply_term,
)
from hf_workbench.resources.erecursion.schemas import (
    BAD_WTERM_FORM,
    UNKNOWN_INDEX,
)
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import HFSet
from hf_workbench.resources.shared.errors import TermSyntaxError
from hf_workbench.resources.shared.sexpr import SExpr, read_sexpr


def from_sexpr(expr: SExpr) -> WTerm:
    if not isinstance(expr, list) or not expr:
        raise TermSyntaxError(BAD_WTERM_FORM)
    head, *args = expr
    match head, args:
        case 'idx', [str(name)]:
            try:
                return Idx(Index(name))
            except ValueError:
                raise TermSyntaxError(f'{UNKNOWN_INDEX}: {name}')
        case 'var', [str(name)]:
            return WVar(name)
        case 'const', [HFSet() as value]:
            return WConst(value)
        case 'app', [fn, first, *rest]:
            return apply_term(
                from_sexpr(fn), *(from_sexpr(a) for a in (first, *rest))
            )
    raise TermSyntaxError(f'{BAD_WTERM_FORM}: {head}')


def parse_wterm(text: str) -> WTerm:
    """
    Parses `(app (idx s) (const {}))`; `(app f a b)` is shorthand for
    `(app (app f a) b)`.

    :return: WTerm.
    """
    return from_sexpr(read_sexpr(text))


def spine(t: WApp) -> tuple[WTerm, list[WTerm]]:
    args: list[WTerm] = []
    head: WTerm = t
    while isinstance(head, WApp):
        args.append(head.arg)
        head = head.fn
    args.reverse()
    return head, args


def to_sexpr(t: WTerm) -> str:
    match t:
        case Idx(index):
            return f'(idx {index.value})'
        case WVar(name):
            return f'(var {name})'
        case WConst(value):
            return f'(const {to_literal(value)})'
    head, args = spine(t)
    parts = ' '.join(to_sexpr(a) for a in (head, *args))
    return f'(app {parts})'
