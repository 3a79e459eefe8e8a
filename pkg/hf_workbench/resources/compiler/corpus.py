"""Regression corpus of Σ₀ formulas: (name, text, variable order)."""

from dataclasses import dataclass

from hf_workbench.resources.formula.catalog import (
    IS_PAIR_TEXT,
    ORDINAL_TEXT,
    TRANSITIVE_TEXT,
)
from hf_workbench.resources.formula.model import Formula
from hf_workbench.resources.formula.parser import parse


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    text: str
    vars: tuple[str, ...]

    @property
    def formula(self) -> Formula:
        return parse(self.text)


def entry(name: str, text: str, *vars: str) -> CorpusEntry:
    return CorpusEntry(name, text, vars)


CORPUS: tuple[CorpusEntry, ...] = (
    # atoms
    entry('self-equal', 'x1 = x1', 'x1'),
    entry('self-member', 'x1 in x1', 'x1'),
    entry('member', 'x1 in x2', 'x1', 'x2'),
    entry('member-reversed', 'x2 in x1', 'x1', 'x2'),
    entry('equal', 'x1 = x2', 'x1', 'x2'),
    entry('equal-reversed', 'x2 = x1', 'x1', 'x2'),
    entry('member-skip', 'x1 in x3', 'x1', 'x2', 'x3'),
    entry('member-skip-reversed', 'x3 in x1', 'x1', 'x2', 'x3'),
    entry('equal-middle', 'x2 = x3', 'x1', 'x2', 'x3'),
    entry('member-middle', 'x1 in x2', 'x1', 'x2', 'x3'),
    entry('member-constant', 'x1 in 2', 'x1'),
    entry('constant-member', '0 in x1', 'x1'),
    entry('equal-constant', 'x1 = {1}', 'x1'),
    entry('constant-only-true', '0 in 1', 'x1'),
    entry('constant-only-false', '1 in 1', 'x1'),
    entry('falsum', 'false', 'x1'),
    # connectives
    entry('and', 'x1 in x2 & x2 in x3', 'x1', 'x2', 'x3'),
    entry('or', 'x1 = x2 | x1 in x2', 'x1', 'x2'),
    entry('imp', 'x1 in x2 -> x1 in x3', 'x1', 'x2', 'x3'),
    entry('not', '~x1 in x2', 'x1', 'x2'),
    entry('double-not', '~~x1 = x2', 'x1', 'x2'),
    entry('nested-imp', 'x1 in x2 -> x2 in x3 -> x1 in x3', 'x1', 'x2', 'x3'),
    entry('imp-left-nested', '(x1 in x2 -> x1 = x2) -> x2 in x1', 'x1', 'x2'),
    entry('or-and', '(x1 in x2 | x2 in x1) & ~x1 = x2', 'x1', 'x2'),
    entry('imp-falsum', 'x1 in x2 -> false', 'x1', 'x2'),
    # bounded quantifiers over variables
    entry('subset', 'all z in x1. z in x2', 'x1', 'x2'),
    entry('subset-reversed', 'all z in x2. z in x1', 'x1', 'x2'),
    entry('inhabited', 'some z in x1. z = z', 'x1'),
    entry('empty', 'all z in x1. false', 'x1'),
    entry('transitive', TRANSITIVE_TEXT, 'x'),
    entry('ordinal', ORDINAL_TEXT, 'x'),
    entry('and-under-all', 'all z in x1. z in x2 & z in x3', 'x1', 'x2', 'x3'),
    entry(
        'imp-under-all',
        'all z in x1. (z in x2 -> z = x3)',
        'x1',
        'x2',
        'x3',
    ),
    entry('meet', 'some z in x1. z in x2', 'x1', 'x2'),
    entry('member-of-member', 'some z in x2. x1 in z', 'x1', 'x2'),
    entry('all-some', 'all z in x1. some w in x2. z in w', 'x1', 'x2'),
    entry('some-all', 'some z in x1. all w in z. w in x2', 'x1', 'x2'),
    entry('singleton-of', 'x1 in x2 & (all z in x2. z = x1)', 'x1', 'x2'),
    entry('pair', IS_PAIR_TEXT, 'p', 'a', 'b'),
    entry('successor', (
        '(all z in x2. z in x1 | z = x1) & (all z in x1. z in x2)'
        ' & x1 in x2'
    ), 'x1', 'x2'),
    # bounded quantifiers over constants
    entry('all-constant', 'all z in 2. (z in x1 -> z in x2)', 'x1', 'x2'),
    entry('some-constant', 'some z in {1,{1}}. z in x1', 'x1'),
    entry('bounded-by-constant-set', 'all z in x1. some w in 3. z = w', 'x1'),
    entry('unused-variable', 'all z in x1. z in x1', 'x1', 'x2'),
)
