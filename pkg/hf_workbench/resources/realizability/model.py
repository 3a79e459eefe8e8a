from dataclasses import dataclass
from typing import Iterable, Optional

from hf_workbench.resources.realizability.enums import (
    UnknownReason,
    VerdictKind,
)


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    reason: Optional[UnknownReason] = None

    @property
    def realized(self) -> bool:
        return self.kind == VerdictKind.REALIZED

    @property
    def refuted(self) -> bool:
        return self.kind == VerdictKind.NOT_REALIZED

    @property
    def unknown(self) -> bool:
        return self.kind == VerdictKind.UNKNOWN


REALIZED = Verdict(VerdictKind.REALIZED)
NOT_REALIZED = Verdict(VerdictKind.NOT_REALIZED)
OUT_OF_FUEL = Verdict(VerdictKind.UNKNOWN, UnknownReason.FUEL)
BEYOND_SEARCH = Verdict(VerdictKind.UNKNOWN, UnknownReason.SEARCH_BOUND)


def holds(value: bool) -> Verdict:
    return REALIZED if value else NOT_REALIZED


def every(verdicts: Iterable[Verdict]) -> Verdict:
    """
    Conjunction: NotRealized as soon as one is, otherwise the first
    Unknown, otherwise Realized.
    """
    pending: Optional[Verdict] = None
    for verdict in verdicts:
        if verdict.refuted:
            return verdict
        if verdict.unknown and pending is None:
            pending = verdict
    return pending or REALIZED


def implies(premise: Verdict, conclusion: Verdict) -> Verdict:
    if premise.refuted or conclusion.realized:
        return REALIZED
    if premise.realized:
        return conclusion
    return premise
