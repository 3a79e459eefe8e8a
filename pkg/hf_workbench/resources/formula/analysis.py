from dataclasses import replace

from hf_workbench.resources.formula.enums import Classification
from hf_workbench.resources.formula.model import (
    BExists,
    BForall,
    Binary,
    Formula,
    SubExists,
    SubForall,
    Term,
    UExists,
    UForall,
    free_vars,
    rename_clashing_binders,
    term_names,
    walk,
)


def classify(phi: Formula) -> Classification:
    """
    SIGMA0 when every quantifier is ∈-bounded, SIGMA0P when ⊆-bounded
    quantifiers also occur, CONTAINS_UNBOUNDED otherwise.
    """
    result = Classification.SIGMA0
    for f in walk(phi):
        if isinstance(f, (UForall, UExists)):
            return Classification.CONTAINS_UNBOUNDED
        if isinstance(f, (SubForall, SubExists)):
            result = Classification.SIGMA0P
    return result


def is_sigma0(phi: Formula) -> bool:
    return classify(phi) == Classification.SIGMA0


def is_bounded(phi: Formula) -> bool:
    return classify(phi) != Classification.CONTAINS_UNBOUNDED


def relativize(phi: Formula, bound: Term) -> Formula:
    """
    φ^(a): every unbounded quantifier becomes ∈-bounded by `bound`.
    Binders reusing a variable of `bound` are renamed first, bounded ones
    included, so no quantifier captures the bound.
    """
    taken = set(free_vars(phi)) | set(term_names(bound))
    return _bound_quantifiers(rename_clashing_binders(phi, taken), bound)


def _bound_quantifiers(phi: Formula, bound: Term) -> Formula:
    if isinstance(phi, Binary):
        return replace(
            phi,
            left=_bound_quantifiers(phi.left, bound),
            right=_bound_quantifiers(phi.right, bound),
        )
    if isinstance(phi, (UForall, UExists)):
        cls = BForall if isinstance(phi, UForall) else BExists
        return cls(
            phi.var, bound, _bound_quantifiers(phi.body, bound), pos=phi.pos
        )
    if isinstance(phi, (BForall, BExists, SubForall, SubExists)):
        return replace(phi, body=_bound_quantifiers(phi.body, bound))
    return phi

