"""Named formulas shared by the compiler corpus, the oracle and reports."""

from hf_workbench.resources.formula.model import Formula, Term, Var, substitute
from hf_workbench.resources.formula.parser import parse

ORDINAL_TEXT = (
    '(all y in x. all z in y. z in x)'
    ' & (all y in x. all z in y. all w in z. w in y)'
)

# u = ω in the limit; on HF values it never holds.
NAT_TEXT = (
    '(some x in u. all y in x. ~y = y)'
    ' & (all x in u. some s in u.'
    ' (all w in s. w in x | w = x) & (all w in x. w in s) & x in s)'
    ' & (all x in u. (all y in x. ~y = y)'
    ' | (some y in u. (all w in x. w in y | w = y)'
    ' & (all w in y. w in x) & y in x))'
)

IS_PAIR_TEXT = (
    '(all w in p. a in w & (all v in w. v = a | v = b))'
    ' & (some w in p. all v in w. v = a)'
    ' & (some w in p. b in w)'
)

SUBSET_TEXT = 'all z in x. z in y'

TRANSITIVE_TEXT = 'all y in x. all z in y. z in x'


def ordinal_formula(var: str = 'x') -> Formula:
    return rename(parse(ORDINAL_TEXT), {'x': Var(var)})


def nat_formula(u: Term = Var('u')) -> Formula:
    return rename(parse(NAT_TEXT), {'u': u})


def is_pair_formula(p: Term, a: Term, b: Term) -> Formula:
    """Σ₀ statement of p = <a,b>."""
    return rename(parse(IS_PAIR_TEXT), {'p': p, 'a': a, 'b': b})


def subset_formula(x: Term, y: Term) -> Formula:
    return rename(parse(SUBSET_TEXT), {'x': x, 'y': y})


def transitive_formula(x: Term) -> Formula:
    return rename(parse(TRANSITIVE_TEXT), {'x': x})


def rename(phi: Formula, mapping: dict[str, Term]) -> Formula:
    """Simultaneous substitution through fresh placeholders."""
    placeholders = {name: f'__{name}' for name in mapping}
    for name, temp in placeholders.items():
        phi = substitute(phi, name, Var(temp))
    for name, temp in placeholders.items():
        phi = substitute(phi, temp, mapping[name])
    return phi
