"""Hand-built application terms used by the checks and the CLI."""

from typing import Sequence

from hf_workbench.resources.erecursion.enums import Index
from hf_workbench.resources.erecursion.model import (
    Idx,
    WApp,
    WConst,
    WTerm,
    WVar,
    apply_term,
    free_vars,
)
from hf_workbench.resources.formula.model import Formula
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.hfset.model import EMPTY, HFSet, numeral, pair

K, S = Idx(Index.K), Idx(Index.S)


def identity_term() -> WTerm:
    """S K K."""
    return apply_term(S, K, K)


def identity_value() -> HFSet:
    """The application state ⟨⟨s, k⟩, k⟩ that SKK evaluates to."""
    return pair(pair(Index.S.code, Index.K.code), Index.K.code)


def self_apply_term() -> WTerm:
    """S I I, so that [S I I](x) = [x](x)."""
    return apply_term(S, identity_term(), identity_term())


def omega_term() -> WTerm:
    """(S I I)(S I I); diverges at every fuel."""
    return WApp(self_apply_term(), self_apply_term())


def pair_term(left: WTerm, right: WTerm) -> WTerm:
    return apply_term(Idx(Index.P), left, right)


def first_term(t: WTerm) -> WTerm:
    return WApp(Idx(Index.P0), t)


def second_term(t: WTerm) -> WTerm:
    return WApp(Idx(Index.P1), t)


def abstract(name: str, t: WTerm) -> WTerm:
    """
    Bracket abstraction: a term f without `name` such that
    [f](c) ≃ t[name/c].

    :return: WTerm.
    """
    match t:
        case WVar(var) if var == name:
            return identity_term()
        case WApp(fn, arg) if name in free_vars(t):
            return apply_term(S, abstract(name, fn), abstract(name, arg))
    return WApp(K, t)


def abstract_all(names: Sequence[str], t: WTerm) -> WTerm:
    """λx₁ … xₙ. t, taking its arguments in order."""
    for name in reversed(names):
        t = abstract(name, t)
    return t


SEPARATION_TEXT = 'u in a'


def separation_formula() -> Formula:
    return parse(SEPARATION_TEXT)


def separation_term() -> WTerm:
    """
    [t](a, b) = {u ∈ b | u ∈ a}, computed as [i₂](b, b, a), which is
    {u ∈ b | u ∈ b → u ∈ a}.
    """
    a, b = WVar('a'), WVar('b')
    return abstract_all(('a', 'b'), apply_term(Idx(Index.I2), b, b, a))


def tagged_term() -> WTerm:
    """[t](s) = ⟨s, 0⟩."""
    return abstract('s', pair_term(WVar('s'), WConst(EMPTY)))


def subset_family_term() -> WTerm:
    """[t](x) = {⟨s, 0⟩ | s ⊆ x}; defined only in powerset mode."""
    x = WVar('x')
    return abstract(
        'x',
        apply_term(Idx(Index.RHO), tagged_term(), WApp(Idx(Index.POW), x)),
    )


def singleton_family_term() -> WTerm:
    """[t](x) = {⟨x, 0⟩}, the powerset-free counterpart."""
    x = WVar('x')
    return abstract(
        'x',
        apply_term(
            Idx(Index.PI),
            pair_term(x, WConst(EMPTY)),
            pair_term(x, WConst(EMPTY)),
        ),
    )


def vm_corpus() -> dict[str, tuple[WTerm, bool]]:
    """Named closed terms with the mode they run in."""
    two, three = WConst(numeral(2)), WConst(numeral(3))
    return {
        'k': (apply_term(K, two, three), False),
        'skk': (WApp(identity_term(), three), False),
        'pair': (pair_term(two, three), False),
        'first': (first_term(pair_term(two, three)), False),
        'second': (second_term(pair_term(two, three)), False),
        'succ-map': (
            apply_term(Idx(Index.RHO), Idx(Index.SN), three),
            False,
        ),
        'separation': (
            apply_term(separation_term(), two, three),
            False,
        ),
        'nested-skk': (
            WApp(identity_term(), WApp(identity_term(), two)),
            False,
        ),
        'subset-family': (
            WApp(subset_family_term(), two),
            True,
        ),
        'subset-family-plain': (
            WApp(subset_family_term(), two),
            False,
        ),
        'omega': (omega_term(), False),
        'non-finitary': (WApp(Idx(Index.OMEGA), two), False),
    }
