"""Name constructors; each returns a coherent name when given ones."""

import functools
from typing import Iterable, Optional

from hf_workbench.resources.fullmodel.model import KName
from hf_workbench.resources.fullmodel.schemas import (
    DIFFERENT_BASE,
    NO_ROOT,
    OUTSIDE_CONE,
)
from hf_workbench.resources.hfset.model import HFSet, numeral
from hf_workbench.resources.kripke.model import Frame, Node
from hf_workbench.resources.shared.errors import (
    InvalidModel,
    NodeOutsideCone,
)


def restrict(g: KName, q: Node) -> KName:
    """k_{p,q}(g) = g ↾ 𝒦^q."""
    if q == g.base:
        return g
    if q not in g.graph:
        raise NodeOutsideCone(f'{OUTSIDE_CONE}: {q}')
    cone = g.frame.cone(q)
    return KName(g.frame, q, {r: g.graph[r] for r in cone})


def empty_name(frame: Frame, p: Node) -> KName:
    return KName(frame, p, {q: frozenset() for q in frame.cone(p)})


@functools.lru_cache(maxsize=None)
def canonical(x: HFSet, frame: Frame, p: Node) -> KName:
    """xᵖ(q) = {y^q | y ∈ x}."""
    return KName(
        frame,
        p,
        {
            q: frozenset(canonical(y, frame, q) for y in x)
            for q in frame.cone(p)
        },
    )


def name_finite_ordinal(n: int, frame: Frame, p: Node) -> KName:
    return canonical(numeral(n), frame, p)


def same_base(*names: KName) -> Node:
    bases = {g.base for g in names}
    if len(bases) != 1:
        raise ValueError(DIFFERENT_BASE)
    return bases.pop()


def name_union(g: KName, h: KName) -> KName:
    """(g ∪ h)(q) = g(q) ∪ h(q)."""
    same_base(g, h)
    return KName(g.frame, g.base, {q: g[q] | h[q] for q in g.graph})


def union_of(names: Iterable[KName], frame: Frame, p: Node) -> KName:
    result = empty_name(frame, p)
    for g in names:
        result = name_union(result, g)
    return result


def name_succ(g: KName) -> KName:
    """(g + 1)(q) = g(q) ∪ {g ↾ q}."""
    return KName(
        g.frame, g.base, {q: g[q] | {restrict(g, q)} for q in g.graph}
    )


def name_plus(g: KName, bit: int) -> KName:
    return name_succ(g) if bit else g


def big_union(g: KName) -> KName:
    """(⋃g)(q) = ⋃{h(q) | h ∈ g(q)}."""
    return KName(
        g.frame,
        g.base,
        {
            q: frozenset().union(*(h[q] for h in g[q]))
            for q in g.graph
        },
    )


def root_of(frame: Frame) -> Node:
    roots = [p for p in frame.nodes if len(frame.cone(p)) == len(frame.nodes)]
    if len(roots) != 1:
        raise InvalidModel(NO_ROOT)
    return roots[0]


def one_p(frame: Frame, p: Node, base: Optional[Node] = None) -> KName:
    """
    1_p, based at the root: 1's graph on the cone of p and 0's graph
    elsewhere.
    """
    base = root_of(frame) if base is None else base
    zero = {q: canonical(numeral(0), frame, q) for q in frame.nodes}
    cone = set(frame.cone(p))
    return KName(
        frame,
        base,
        {
            s: frozenset({zero[s]}) if s in cone else frozenset()
            for s in frame.cone(base)
        },
    )


def validate_name(g: KName) -> list[str]:
    """
    Violations of: the graph's domain is exactly the cone of the base,
    members of g(q) are based at q and of lower stage, and h ∈ g(q) with
    q R r gives h ↾ r ∈ g(r).
    """
    violations: list[str] = []
    seen: set[KName] = set()
    pending = [g]
    while pending:
        name = pending.pop()
        if name in seen:
            continue
        seen.add(name)
        cone = name.frame.cone(name.base)
        if set(name.graph) != set(cone):
            violations.append(f'graph domain is not the cone of {name.base}')
            continue
        for q, members in name.graph.items():
            for h in members:
                if h.base != q:
                    violations.append(f'member at {q} based at {h.base}')
                    continue
                if h.stage >= name.stage:
                    violations.append(f'member at {q} has no lower stage')
                pending.append(h)
                for r in name.frame.cone(q):
                    try:
                        coherent = restrict(h, r) in name.graph[r]
                    except NodeOutsideCone as error:
                        violations.append(error.message)
                        continue
                    if not coherent:
                        violations.append(f'incoherent between {q} and {r}')
    return violations
