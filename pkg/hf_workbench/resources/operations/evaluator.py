import logging
from typing import Callable, Mapping

from hf_workbench.resources.hfset.model import (
    EMPTY,
    HFSet,
    as_pair,
    domain,
    hf,
    image,
    make_tuple,
    pair,
    pairs_of,
    product,
    range_of,
    union_all,
)
from hf_workbench.resources.operations.enums import (
    AUXILIARY,
    FUNDAMENTAL,
    OpCode,
)
from hf_workbench.resources.operations.model import (
    App2,
    App3,
    OpTerm,
    TermConst,
    TermVar,
)
from hf_workbench.resources.shared.errors import UnboundVariable

logger = logging.getLogger(__name__)


def op_pair(x: HFSet, y: HFSet) -> HFSet:
    return hf(x, y)


def op_inter(x: HFSet, y: HFSet) -> HFSet:
    """x ∩ ⋂y, read as {z ∈ x | ∀w ∈ y (z ∈ w)}; y = 0 gives x."""
    return HFSet.of(
        z for z in x.elements if all(z in w.elements for w in y.elements)
    )


def op_union(x: HFSet, y: HFSet) -> HFSet:
    return union_all(x)


def op_diff(x: HFSet, y: HFSet) -> HFSet:
    return HFSet.of(x.elements - y.elements)


def op_imp(x: HFSet, y: HFSet) -> HFSet:
    found = as_pair(y)
    if found is None:
        return EMPTY
    first, second = found
    return HFSet.of(
        z
        for z in x.elements
        if z not in first.elements or z in second.elements
    )


def op_forall(x: HFSet, y: HFSet) -> HFSet:
    return HFSet.of(image(x, z) for z in y.elements)


def op_dom(x: HFSet, y: HFSet) -> HFSet:
    return domain(x)


def op_ran(x: HFSet, y: HFSet) -> HFSet:
    return range_of(x)


def op_abc(x: HFSet, y: HFSet) -> HFSet:
    return HFSet.of(
        pair(u, pair(v, w)) for u, v in pairs_of(x) for w in y.elements
    )


def op_acb(x: HFSet, y: HFSet) -> HFSet:
    return HFSet.of(
        pair(u, pair(w, v)) for u, v in pairs_of(x) for w in y.elements
    )


def op_eq(x: HFSet, y: HFSet) -> HFSet:
    return HFSet.of(pair(u, u) for u in x.elements & y.elements)


def op_in(x: HFSet, y: HFSet) -> HFSet:
    return HFSet.of(
        pair(v, u) for v in y.elements for u in v.elements if u in x
    )


FUNDAMENTAL_TABLE: dict[OpCode, Callable[[HFSet, HFSet], HFSet]] = {
    OpCode.PAIR: op_pair,
    OpCode.INTER: op_inter,
    OpCode.UNION: op_union,
    OpCode.DIFF: op_diff,
    OpCode.TIMES: product,
    OpCode.IMP: op_imp,
    OpCode.FORALL: op_forall,
    OpCode.DOM: op_dom,
    OpCode.RAN: op_ran,
    OpCode.ABC: op_abc,
    OpCode.ACB: op_acb,
    OpCode.EQ: op_eq,
    OpCode.IN: op_in,
}

AUX_TABLE: dict[OpCode, Callable[[HFSet, HFSet, HFSet], HFSet]] = {
    OpCode.G0: lambda x, y, z: pair(x, y),
    OpCode.G1: lambda x, y, z: image(x, y),
    OpCode.G2: lambda x, y, z: make_tuple([x, y, z]),
    OpCode.G3: lambda x, y, z: hf(x, pair(y, z)),
}


def eval_fund(code: OpCode, x: HFSet, y: HFSet) -> HFSet:
    return FUNDAMENTAL_TABLE[code](x, y)


def eval_aux_g(code: OpCode, x: HFSet, y: HFSet, z: HFSet) -> HFSet:
    return AUX_TABLE[code](x, y, z)


def eval_term(t: OpTerm, env: Mapping[str, HFSet]) -> HFSet:
    """
    Evaluates an operation term; shared subterms are evaluated once.

    :return: HFSet.
    """
    memo: dict[int, HFSet] = {}

    def visit(node: OpTerm) -> HFSet:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, TermVar):
            if node.name not in env:
                raise UnboundVariable(node.name)
            value = env[node.name]
        elif isinstance(node, TermConst):
            value = node.value
        elif isinstance(node, App2):
            value = eval_fund(node.code, visit(node.left), visit(node.right))
        elif isinstance(node, App3):
            value = eval_aux_g(
                node.code,
                visit(node.first),
                visit(node.second),
                visit(node.third),
            )
        memo[key] = value
        return value

    return visit(t)


def expand_g1(x: OpTerm, y: OpTerm) -> OpTerm:
    """
    𝓖₁ through five applications of the original operations:
    ran(x ∩ ⋂{ {y} × ran(x) }).
    """
    singleton = App2(OpCode.PAIR, y, y)
    candidates = App2(OpCode.TIMES, singleton, App2(OpCode.RAN, x, x))
    return App2(
        OpCode.RAN,
        App2(
            OpCode.INTER, x, App2(OpCode.PAIR, candidates, candidates)
        ),
        x,
    )


def binary_union(s: OpTerm, t: OpTerm) -> OpTerm:
    """s ∪ t = 𝓕_∪(𝓕_pair(s, t), ·); the second argument is ignored."""
    return App2(OpCode.UNION, App2(OpCode.PAIR, s, t), s)


def kuratowski_term(s: OpTerm, t: OpTerm) -> OpTerm:
    return App2(
        OpCode.PAIR, App2(OpCode.PAIR, s, s), App2(OpCode.PAIR, s, t)
    )


def transitive_extension(b: HFSet, with_aux: bool = True) -> HFSet:
    """b ∪ {𝓕ᵢ(x, y)} ∪ {𝓖ᵢ(x, y, z)} for all arguments drawn from b."""
    members = b.ordered()
    produced = set(b.elements)
    for x in members:
        for y in members:
            for code in FUNDAMENTAL:
                produced.add(eval_fund(code, x, y))
            if with_aux:
                for z in members:
                    for code in AUXILIARY:
                        produced.add(eval_aux_g(code, x, y, z))
    logger.debug('extended %d members to %d', len(b), len(produced))
    return HFSet.of(produced)
