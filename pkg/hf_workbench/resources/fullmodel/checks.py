import itertools
from typing import Callable, Iterable, Optional

from hf_workbench.resources.formula.catalog import ordinal_formula
from hf_workbench.resources.formula.model import Const, Eq, In, Var
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.fullmodel.coding import (
    delta_decode,
    delta_encode,
    incomparable,
)
from hf_workbench.resources.fullmodel.enums import NameProperty
from hf_workbench.resources.fullmodel.forcing import NameForcing
from hf_workbench.resources.fullmodel.names import (
    canonical,
    name_succ,
    one_p,
    restrict,
    root_of,
    union_of,
    validate_name,
)
from hf_workbench.resources.fullmodel.universe import build_universe
from hf_workbench.resources.hfset.model import numeral
from hf_workbench.resources.kripke.examples import all_frames, chains
from hf_workbench.resources.kripke.model import Frame
from hf_workbench.resources.shared.schemas import Report

G, H, X, U = Var('g'), Var('h'), Var('x'), Var('u')

NAME_CORPUS_TEXTS: tuple[str, ...] = (
    'g = h',
    'g in h',
    '~g = h',
    'g in h | ~g in h',
    '~~g in h',
    'g in h -> h in g',
    'all x in g. x in h',
    'some x in h. x = g',
    'All x. (x in g -> x in h)',
    'Some x. x in g',
)


def check_canonical(frame: Frame, max_n: int = 4) -> Report:
    """q ⊩ nᵖ = n^q on the cone of p, and m ∈ n gives p ⊩ mᵖ ∈ nᵖ."""
    forcing = NameForcing(frame)
    report = Report(name='canonical-names')
    for p in frame.nodes:
        for n in range(max_n + 1):
            name = canonical(numeral(n), frame, p)
            report.record(not validate_name(name), f'{n}^{p} incoherent')
            for q in frame.cone(p):
                report.record(
                    forcing.forces(q, Eq(G, Const(numeral(n))), {'g': name}),
                    f'{q} does not force {n}^{p} = {n}^{q}',
                )
            for m in range(n):
                report.record(
                    forcing.forces(
                        p,
                        In(G, H),
                        {'g': canonical(numeral(m), frame, p), 'h': name},
                    ),
                    f'{p} does not force {m} in {n}',
                )
    return report


def check_star(frame: Frame, max_n: int = 3) -> Report:
    """
    x ∈ ⋃_{i ∈ I} a_i iff x ∈ a_i for some i, at every node, for every
    family of canonical ordinals and 1_p names.
    """
    root = root_of(frame)
    forcing = NameForcing(frame)
    report = Report(name='lemma-star')
    pool = [canonical(numeral(n), frame, root) for n in range(max_n + 1)]
    pool += [one_p(frame, p) for p in frame.nodes]
    for size in range(1, len(pool) + 1):
        for family in itertools.combinations(pool, size):
            union = union_of(family, frame, root)
            for s in frame.nodes:
                candidates = [
                    canonical(numeral(n), frame, s) for n in range(max_n + 2)
                ] + [restrict(a, s) for a in pool]
                for x in candidates:
                    inside = forcing.forces(s, In(X, U), {'x': x, 'u': union})
                    some = any(
                        forcing.forces(s, In(X, U), {'x': x, 'u': a})
                        for a in family
                    )
                    report.record(
                        inside == some, f'union of {size} names at {s}'
                    )
    return report


def check_one_p(frame: Frame) -> Report:
    """
    Every node forces 1_p ⊆ 1 and that 1_p is an ordinal; 1_p = 1ˢ on
    the cone of p and 1_p = 0ˢ where the cone of s misses it. Nodes
    outside the cone whose cone meets it are listed.
    """
    forcing = NameForcing(frame)
    report = Report(name='one-p')
    subset_of_one = parse('all z in g. z in 1')
    ordinal = ordinal_formula('g')
    one_eq, zero_eq = Eq(G, Const(numeral(1))), Eq(G, Const(numeral(0)))
    meeting = []
    for p in frame.nodes:
        name = one_p(frame, p)
        report.record(not validate_name(name), f'1_{p} incoherent')
        cone = set(frame.cone(p))
        for s in frame.nodes:
            params = {'g': name}
            report.record(
                forcing.forces(s, subset_of_one, params),
                f'{s} does not force 1_{p} ⊆ 1',
            )
            report.record(
                forcing.forces(s, ordinal, params),
                f'{s} does not force 1_{p} ordinal',
            )
            if s in cone:
                report.record(
                    forcing.forces(s, one_eq, params),
                    f'{s} does not force 1_{p} = 1',
                )
            elif cone.isdisjoint(frame.cone(s)):
                report.record(
                    forcing.forces(s, zero_eq, params),
                    f'{s} does not force 1_{p} = 0',
                )
            else:
                meeting.append(
                    {
                        'p': p,
                        's': s,
                        'one': forcing.forces(s, one_eq, params),
                        'zero': forcing.forces(s, zero_eq, params),
                    }
                )
    report.details = {'off_cone_meeting': meeting}
    return report


def check_lem(frame: Optional[Frame] = None) -> Report:
    """
    On the two-node chain with α the upper node, the root forces neither
    0 ∈ 1_α + 1 nor 0 ∈ 1_α ∨ ¬(0 ∈ 1_α), while α forces 0 ∈ 1_α + 1.
    """
    frame = frame or chains(2)
    root, top = frame.nodes[0], frame.nodes[-1]
    forcing = NameForcing(frame)
    report = Report(name='lem-failure')
    one_alpha = one_p(frame, top)
    member = parse('0 in g')
    lem = parse('0 in g | ~0 in g')
    successor = {'g': name_succ(one_alpha)}
    report.record(
        not forcing.forces(root, member, successor),
        'root forces 0 in 1_a + 1',
    )
    report.record(
        not forcing.forces(root, lem, {'g': one_alpha}),
        'root forces excluded middle for 0 in 1_a',
    )
    report.record(
        forcing.forces(top, member, successor),
        'upper node does not force 0 in 1_a + 1',
    )
    return report


def bit_strings(max_len: int) -> Iterable[tuple[int, ...]]:
    for length in range(max_len + 1):
        yield from itertools.product((0, 1), repeat=length)


def check_delta(max_len: int = 4, frame: Optional[Frame] = None) -> Report:
    frame = frame or chains(2)
    alpha_name = one_p(frame, frame.nodes[-1])
    forcing = NameForcing(frame)
    report = Report(name='delta-coding')
    round_trips = 0
    for bits in bit_strings(max_len):
        delta = delta_encode(bits, alpha_name)
        decoded = delta_decode(delta, alpha_name, len(bits), forcing)
        report.record(
            not validate_name(delta), f'code of {bits} incoherent'
        )
        report.record(tuple(decoded) == bits, f'{bits} decoded as {decoded}')
        round_trips += tuple(decoded) == bits
    for k, n in itertools.product(range(max_len + 1), repeat=2):
        if k != n:
            report.record(
                incomparable(k, n, alpha_name, forcing),
                f'X_{k} forced into X_{n} + 1',
            )
    report.details = {'round_trips': round_trips}
    return report


def check_universe(frame: Frame, cutoff: int) -> Report:
    """Every generated name is coherent; counts shrink along R."""
    universe = build_universe(frame, cutoff)
    report = Report(name='name-universe')
    for p, names in universe.items():
        for g in names:
            report.record(not validate_name(g), f'incoherent name at {p}')
    for p, q in frame.rel:
        report.record(
            len(universe[p]) >= len(universe[q]),
            f'more names at {q} than at {p}',
        )
    report.details = {'counts': {p: len(v) for p, v in universe.items()}}
    return report


def check_name_persistence(max_nodes: int = 3, cutoff: int = 2) -> Report:
    """p ⊩ φ(ḡ) and p R q give q ⊩ φ(ḡ ↾ q), over all small frames."""
    formulas = [parse(text) for text in NAME_CORPUS_TEXTS]
    report = Report(name='name-persistence')
    for frame in all_frames(max_nodes):
        forcing = NameForcing(frame, cutoff)
        universe = forcing.universe
        for p in frame.nodes:
            for g, h in itertools.product(universe[p], repeat=2):
                params = {'g': g, 'h': h}
                for phi in formulas:
                    if not forcing.forces(p, phi, params):
                        continue
                    for q in frame.cone(p):
                        report.record(
                            forcing.forces(q, phi, params),
                            f'persistence fails from {p} to {q}',
                        )
    return report


PROPERTY_CHECKS: dict[NameProperty, Callable[[Frame], Report]] = {
    NameProperty.STAR: check_star,
    NameProperty.ONEP: check_one_p,
    NameProperty.LEM: check_lem,
    NameProperty.DELTA: lambda frame: check_delta(frame=frame),
    NameProperty.CANONICAL: check_canonical,
}
