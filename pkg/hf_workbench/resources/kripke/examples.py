"""Stock frames and models for the forcing checks."""

import itertools
from typing import Iterator

from hf_workbench.resources.formula.model import Formula
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import HFSet
from hf_workbench.resources.kripke.model import (
    Frame,
    KripkeModel,
    Node,
    NodeStructure,
)

# Free variables a and b; depth at most 4.
FORCING_CORPUS_TEXTS: tuple[str, ...] = (
    'a = b',
    'a in b',
    'false',
    '~a = b',
    'a = b | ~a = b',
    '~~a = b',
    '~~a = b -> a = b',
    'a in b -> b in a',
    '~(a = b & ~a = b)',
    '(a in b | b in a) -> a in b',
    'a = b & b in a',
    'All x. x = a | ~x = a',
    'Some x. x = a',
    'All x. (x in a -> x in b)',
    'Some x. x in b & x = a',
    '~(All x. x = a)',
    'All x. ~~x = a',
    '~~(All x. x = a | ~x = a)',
    'All x. All y. (x = y -> y = x)',
    'Some x. All y. y in x',
    'all x in b. x = a',
    'some x in b. ~x = a',
)

# Intuitionistic axiom instances (K and S shapes) over a and b.
AXIOM_TEXTS: tuple[str, ...] = (
    'a = b -> a in b -> a = b',
    '(a = b -> a in b -> b in a) -> (a = b -> a in b) -> a = b -> b in a',
    'a = b & a in b -> a = b',
    'a = b -> a = b | a in b',
    'false -> a = b',
)


def forcing_corpus() -> list[Formula]:
    return [parse(text) for text in FORCING_CORPUS_TEXTS]


def two_node_example() -> KripkeModel:
    """
    Root 0 below node 1, both with carriers a and b; a = b holds only at
    1. The root forces neither a = b nor its negation.
    """
    frame = Frame.preorder(('0', '1'), [('0', '1')])
    return KripkeModel(
        frame=frame,
        structures={
            '0': NodeStructure(domain=('a', 'b')),
            '1': NodeStructure(
                domain=('a', 'b'), classes=(frozenset({'a', 'b'}),)
            ),
        },
        transitions={('0', '1'): {'a': 'a', 'b': 'b'}},
    )


def single_node(
    domain: tuple[str, ...],
    membership: frozenset[tuple[str, str]] = frozenset(),
    classes: tuple[frozenset[str], ...] = (),
) -> KripkeModel:
    return KripkeModel(
        frame=Frame.preorder(('0',), ()),
        structures={'0': NodeStructure(domain, classes, membership)},
    )


def from_transitive_set(M: HFSet) -> KripkeModel:
    """The one-node model ⟨M, ∈⟩; elements are named by their literals."""
    members = M.ordered()
    return single_node(
        tuple(to_literal(x) for x in members),
        frozenset(
            (to_literal(x), to_literal(y))
            for x in members
            for y in members
            if x in y
        ),
    )


def chains(n: int) -> Frame:
    nodes = tuple(str(i) for i in range(n))
    return Frame.preorder(nodes, zip(nodes, nodes[1:]))


def is_transitive_relation(rel: set[tuple[Node, Node]]) -> bool:
    return all(
        (p, s) in rel for p, q in rel for r, s in rel if q == r
    )


def all_frames(max_nodes: int) -> Iterator[Frame]:
    """Every preorder on the nodes 0..k-1, for k = 1..max_nodes."""
    for k in range(1, max_nodes + 1):
        nodes = tuple(str(i) for i in range(k))
        diagonal = {(p, p) for p in nodes}
        others = [(p, q) for p in nodes for q in nodes if p != q]
        for size in range(len(others) + 1):
            for edges in itertools.combinations(others, size):
                rel = diagonal | set(edges)
                if is_transitive_relation(rel):
                    yield Frame(nodes, frozenset(rel))


def up_sets(frame: Frame) -> list[frozenset[Node]]:
    """The empty set and the principal cones of the frame."""
    found = [frozenset()]
    for p in frame.nodes:
        cone = frozenset(frame.cone(p))
        if cone not in found:
            found.append(cone)
    return found


def decorate(
    frame: Frame,
    equal_at: frozenset[Node],
    member_at: frozenset[Node],
    grow_at: frozenset[Node],
) -> KripkeModel:
    """
    Carriers a and b everywhere plus c on `grow_at`; a = b on
    `equal_at`, a ∈ b on `member_at`. Up-closed arguments give a valid
    model with identity transitions.
    """
    structures = {}
    for p in frame.nodes:
        domain = ('a', 'b', 'c') if p in grow_at else ('a', 'b')
        classes = (frozenset({'a', 'b'}),) if p in equal_at else ()
        membership = set()
        if p in member_at:
            left = {'a', 'b'} if p in equal_at else {'a'}
            right = {'a', 'b'} if p in equal_at else {'b'}
            membership = {(x, y) for x in left for y in right}
        structures[p] = NodeStructure(domain, classes, frozenset(membership))
    transitions = {
        (p, q): {d: d for d in structures[p].domain}
        for p, q in frame.rel
    }
    return KripkeModel(frame, structures, transitions)


def decorations(frame: Frame) -> Iterator[KripkeModel]:
    for equal_at in up_sets(frame):
        for member_at in {frozenset(), equal_at}:
            for grow_at in {frozenset(), equal_at}:
                yield decorate(frame, equal_at, member_at, grow_at)
