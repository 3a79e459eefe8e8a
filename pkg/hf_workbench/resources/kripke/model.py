from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from hf_workbench.resources.kripke.schemas import (
    MISSING_TRANSITION,
    UNKNOWN_ELEMENT,
    UNKNOWN_NODE,
)
from hf_workbench.resources.shared.errors import InvalidModel

Node = str
Element = str


@dataclass(frozen=True)
class Frame:
    """Finite frame: nodes and an accessibility relation R."""

    nodes: tuple[Node, ...]
    rel: frozenset[tuple[Node, Node]]

    @classmethod
    def preorder(
        cls, nodes: Iterable[Node], edges: Iterable[tuple[Node, Node]]
    ) -> 'Frame':
        """The reflexive-transitive closure of `edges`."""
        nodes = tuple(nodes)
        rel = {(p, p) for p in nodes} | set(edges)
        changed = True
        while changed:
            changed = False
            for p, q in list(rel):
                for r, s in list(rel):
                    if q == r and (p, s) not in rel:
                        rel.add((p, s))
                        changed = True
        return cls(nodes, frozenset(rel))

    def accessible(self, p: Node, q: Node) -> bool:
        return (p, q) in self.rel

    def cone(self, p: Node) -> tuple[Node, ...]:
        """𝒦ᵖ = {q | p R q}, in frame order."""
        if p not in self.nodes:
            raise InvalidModel(f'{UNKNOWN_NODE}: {p}')
        return tuple(q for q in self.nodes if (p, q) in self.rel)

    def roots(self) -> tuple[Node, ...]:
        return tuple(
            p
            for p in self.nodes
            if all(
                (q, p) not in self.rel or (p, q) in self.rel
                for q in self.nodes
            )
        )


@dataclass(frozen=True)
class NodeStructure:
    """
    Classical structure at one node: a domain, an interpreted equality
    given by its classes, and a membership relation.
    """

    domain: tuple[Element, ...]
    classes: tuple[frozenset[Element], ...] = ()
    membership: frozenset[tuple[Element, Element]] = frozenset()

    @cached_property
    def class_of(self) -> dict[Element, frozenset[Element]]:
        found = {d: frozenset({d}) for d in self.domain}
        for cls in self.classes:
            for d in cls:
                found[d] = found.get(d, frozenset()) | cls
        return found

    def check(self, d: Element) -> Element:
        if d not in self.class_of:
            raise InvalidModel(f'{UNKNOWN_ELEMENT}: {d}')
        return d

    def equal(self, a: Element, b: Element) -> bool:
        return self.check(b) in self.class_of[self.check(a)]

    def member(self, a: Element, b: Element) -> bool:
        return (self.check(a), self.check(b)) in self.membership


@dataclass(frozen=True)
class KripkeModel:
    """
    Frame, node structures, and the transition maps ι_{p,q} for p R q.
    A missing ι_{p,p} is the identity.
    """

    frame: Frame
    structures: Mapping[Node, NodeStructure]
    transitions: Mapping[tuple[Node, Node], Mapping[Element, Element]] = (
        field(default_factory=dict)
    )

    def structure(self, p: Node) -> NodeStructure:
        if p not in self.structures:
            raise InvalidModel(f'{UNKNOWN_NODE}: {p}')
        return self.structures[p]

    def transition(self, p: Node, q: Node) -> Mapping[Element, Element]:
        if (p, q) in self.transitions:
            return self.transitions[(p, q)]
        if p == q:
            return {d: d for d in self.structure(p).domain}
        raise InvalidModel(f'{MISSING_TRANSITION}: {p} -> {q}')

    def transport(
        self, p: Node, q: Node, assignment: Mapping[str, Element]
    ) -> dict[str, Element]:
        iota = self.transition(p, q)
        moved = {}
        for name, d in assignment.items():
            if d not in iota:
                raise InvalidModel(f'{UNKNOWN_ELEMENT}: {d} at {p}')
            moved[name] = iota[d]
        return moved

    def truncate(self, p: Node) -> 'KripkeModel':
        """The cone model 𝒦ᵖ."""
        cone = self.frame.cone(p)
        kept = set(cone)
        return KripkeModel(
            frame=Frame(
                cone,
                frozenset(
                    (a, b)
                    for a, b in self.frame.rel
                    if a in kept and b in kept
                ),
            ),
            structures={q: self.structures[q] for q in cone},
            transitions={
                (a, b): iota
                for (a, b), iota in self.transitions.items()
                if a in kept and b in kept
            },
        )
