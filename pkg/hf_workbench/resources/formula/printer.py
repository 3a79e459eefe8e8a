from hf_workbench.resources.formula.model import (
    And,
    BExists,
    BForall,
    Const,
    Eq,
    Falsum,
    Formula,
    Imp,
    In,
    Or,
    SubExists,
    SubForall,
    Term,
    UExists,
    UForall,
    is_negation,
)
from hf_workbench.resources.hfset.literal import to_literal

IMP, OR, AND, UNARY = 1, 2, 3, 4

_PREFIX = {
    BForall: ('all', 'in'),
    BExists: ('some', 'in'),
    SubForall: ('all', 'sub'),
    SubExists: ('some', 'sub'),
}


def term_text(t: Term) -> str:
    if isinstance(t, Const):
        return to_literal(t.value)
    return t.name


def render(phi: Formula) -> tuple[str, int, bool]:
    """Returns (text, precedence, open_right)."""
    if isinstance(phi, Falsum):
        return 'false', UNARY, False
    if isinstance(phi, In):
        return f'{term_text(phi.left)} in {term_text(phi.right)}', UNARY, False
    if isinstance(phi, Eq):
        return f'{term_text(phi.left)} = {term_text(phi.right)}', UNARY, False
    if is_negation(phi):
        text, is_open = wrap(phi.left, UNARY, as_left=False)
        return f'~{text}', UNARY, is_open
    if isinstance(phi, And):
        return binary(phi, ' & ', AND, AND, UNARY)
    if isinstance(phi, Or):
        return binary(phi, ' | ', OR, OR, AND)
    if isinstance(phi, Imp):
        return binary(phi, ' -> ', IMP, OR, IMP)
    if isinstance(phi, (UForall, UExists)):
        word = 'All' if isinstance(phi, UForall) else 'Some'
        body, _ = wrap(phi.body, IMP, as_left=False)
        return f'{word} {phi.var}. {body}', UNARY, True
    word, kind = _PREFIX[type(phi)]
    body, _ = wrap(phi.body, IMP, as_left=False)
    bound = term_text(phi.bound)
    return f'{word} {phi.var} {kind} {bound}. {body}', UNARY, True


def wrap(phi: Formula, minimum: int, as_left: bool) -> tuple[str, bool]:
    text, prec, is_open = render(phi)
    if prec < minimum or (as_left and is_open):
        return f'({text})', False
    return text, is_open


def binary(
    phi: Formula, op: str, prec: int, left_min: int, right_min: int
) -> tuple[str, int, bool]:
    left, _ = wrap(phi.left, left_min, as_left=True)
    right, is_open = wrap(phi.right, right_min, as_left=False)
    return f'{left}{op}{right}', prec, is_open


def to_text(phi: Formula) -> str:
    """
    Canonical text of `phi`; parsing it yields an equal AST.

    :return: str.
    """
    return render(phi)[0]
