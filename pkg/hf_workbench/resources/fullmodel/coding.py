"""
Bit strings coded as ordinal-like names. With X_n = n ∪ (1_α + 1) the
X_n are pairwise incomparable, so δ = ⋃_n (X_n + c(n)) contains X_n
exactly when c(n) = 1.
"""

from typing import Optional, Sequence

from hf_workbench.resources.formula.model import In, Var
from hf_workbench.resources.fullmodel.forcing import NameForcing
from hf_workbench.resources.fullmodel.model import KName
from hf_workbench.resources.fullmodel.names import (
    name_finite_ordinal,
    name_plus,
    name_succ,
    name_union,
    union_of,
)

MEMBER = In(Var('x'), Var('d'))


def coding_ordinal(n: int, alpha_name: KName) -> KName:
    """X_n = n ∪ (1_α + 1), at the base of `alpha_name`."""
    frame, base = alpha_name.frame, alpha_name.base
    return name_union(
        name_finite_ordinal(n, frame, base), name_succ(alpha_name)
    )


def delta_encode(bits: Sequence[int], alpha_name: KName) -> KName:
    return union_of(
        (
            name_plus(coding_ordinal(n, alpha_name), bit)
            for n, bit in enumerate(bits)
        ),
        alpha_name.frame,
        alpha_name.base,
    )


def delta_decode(
    delta: KName,
    alpha_name: KName,
    n_max: int,
    forcing: Optional[NameForcing] = None,
) -> list[int]:
    """Bit n is 1 iff the base node forces X_n ∈ δ."""
    forcing = forcing or NameForcing(delta.frame)
    return [
        int(
            forcing.forces(
                delta.base,
                MEMBER,
                {'x': coding_ordinal(n, alpha_name), 'd': delta},
            )
        )
        for n in range(n_max)
    ]


def incomparable(
    k: int,
    n: int,
    alpha_name: KName,
    forcing: Optional[NameForcing] = None,
) -> bool:
    """The base node does not force X_k ∈ X_n + 1."""
    forcing = forcing or NameForcing(alpha_name.frame)
    return not forcing.forces(
        alpha_name.base,
        MEMBER,
        {
            'x': coding_ordinal(k, alpha_name),
            'd': name_succ(coding_ordinal(n, alpha_name)),
        },
    )
