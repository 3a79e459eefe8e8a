import itertools

from hf_workbench.resources.kripke.model import KripkeModel
from hf_workbench.resources.kripke.schemas import (
    INVALID_MODEL,
    NOT_REFLEXIVE,
    NOT_TRANSITIVE,
    PREORDER_REQUIRED,
)
from hf_workbench.resources.shared.errors import InvalidModel
from hf_workbench.resources.shared.schemas import Report


def check_frame(m: KripkeModel, report: Report) -> None:
    frame = m.frame
    for p in frame.nodes:
        report.record(frame.accessible(p, p), f'{NOT_REFLEXIVE}: {p}')
    for p, q, r in itertools.product(frame.nodes, repeat=3):
        if frame.accessible(p, q) and frame.accessible(q, r):
            report.record(
                frame.accessible(p, r), f'{NOT_TRANSITIVE}: {p} {q} {r}'
            )


def check_structures(m: KripkeModel, report: Report) -> None:
    for p in m.frame.nodes:
        if p not in m.structures:
            report.record(False, f'node {p} has no structure')
            continue
        s = m.structures[p]
        for cls in s.classes:
            report.record(
                cls <= set(s.domain), f'eq class outside domain at {p}'
            )
        for a, b in s.membership:
            report.record(
                a in s.class_of and b in s.class_of,
                f'membership outside domain at {p}: {a} {b}',
            )
        for d, cls in s.class_of.items():
            report.record(
                all(s.class_of[e] == cls for e in cls),
                f'eq classes overlap at {p}: {d}',
            )
        # eq-congruence of membership
        for a, b in s.membership:
            if a not in s.class_of or b not in s.class_of:
                continue
            for a2 in s.class_of[a]:
                for b2 in s.class_of[b]:
                    report.record(
                        (a2, b2) in s.membership,
                        f'membership not eq-congruent at {p}: {a2} {b2}',
                    )


def check_transitions(m: KripkeModel, report: Report) -> None:
    frame = m.frame
    for p, q in sorted(frame.rel):
        if p not in m.structures or q not in m.structures:
            continue
        try:
            iota = m.transition(p, q)
        except InvalidModel as error:
            report.record(False, error.message)
            continue
        source, target = m.structures[p], m.structures[q]
        for d in source.domain:
            report.record(
                d in iota and iota[d] in target.class_of,
                f'transition {p}->{q} undefined or outside domain at {d}',
            )
        if not all(
            d in iota and iota[d] in target.class_of for d in source.domain
        ):
            continue
        for a, b in itertools.product(source.domain, repeat=2):
            if source.equal(a, b):
                report.record(
                    target.equal(iota[a], iota[b]),
                    f'transition {p}->{q} breaks equality {a}={b}',
                )
            if source.member(a, b):
                report.record(
                    target.member(iota[a], iota[b]),
                    f'transition {p}->{q} breaks membership {a}∈{b}',
                )
        if p == q:
            for d in source.domain:
                report.record(
                    source.equal(iota[d], d),
                    f'transition {p}->{p} is not the identity at {d}',
                )


def check_composition(m: KripkeModel, report: Report) -> None:
    frame = m.frame
    for p, q, r in itertools.product(frame.nodes, repeat=3):
        if not (frame.accessible(p, q) and frame.accessible(q, r)):
            continue
        if not frame.accessible(p, r):
            continue
        try:
            pq, qr, pr = (
                m.transition(p, q),
                m.transition(q, r),
                m.transition(p, r),
            )
        except InvalidModel:
            continue
        target = m.structures.get(r)
        if target is None:
            continue
        for d in m.structures[p].domain:
            if d not in pq or pq[d] not in qr or d not in pr:
                continue
            composed, direct = qr[pq[d]], pr[d]
            if composed in target.class_of and direct in target.class_of:
                report.record(
                    target.equal(composed, direct),
                    f'composition fails for {p}->{q}->{r} at {d}',
                )


def validate(m: KripkeModel) -> Report:
    """
    Checks that R is a preorder, that every node structure is coherent,
    that every ι_{p,q} is a homomorphism, and the composition law
    ι_{p,r} = ι_{q,r} ∘ ι_{p,q} up to equality at r.

    :return: Report listing every violation.
    """
    report = Report(name='kripke-validate')
    check_frame(m, report)
    check_structures(m, report)
    check_transitions(m, report)
    check_composition(m, report)
    report.details = {
        'nodes': len(m.frame.nodes),
        'preorder_required': PREORDER_REQUIRED,
    }
    return report


def require_valid(m: KripkeModel) -> KripkeModel:
    report = validate(m)
    if not report.ok:
        raise InvalidModel(INVALID_MODEL, report.violations)
    return m
