import functools
import itertools
from typing import Iterable, Iterator, Optional

from hf_workbench.resources.hfset.enums import PairSide, SetAlgebraKind
from hf_workbench.resources.hfset.repository import get_canonical_store
from hf_workbench.resources.hfset.schemas import (
    EMPTY_TUPLE,
    NOT_A_PAIR,
    POWERSET_TOO_LARGE,
    SECOND_ARGUMENT_REQUIRED,
)
from hf_workbench.resources.shared.errors import (
    BudgetExceeded,
    EmptyTuple,
    NotAPair,
)

_UNSET = object()


class HFSet:
    """
    Hereditarily finite set, interned so that extensional equality is
    object identity.

    Never instantiate directly; use `HFSet.of` or the helpers below.
    """

    __slots__ = (
        'elements',
        'canonical_id',
        'rank',
        '_key',
        '_ordered',
        '_pair',
    )

    def __init__(self, elements: frozenset, canonical_id: int):
        self.elements = elements
        self.canonical_id = canonical_id
        self.rank = max((e.rank + 1 for e in elements), default=0)
        self._key = None
        self._ordered = None
        self._pair = _UNSET

    @classmethod
    def of(cls, iterable: Iterable['HFSet'] = ()) -> 'HFSet':
        elements = frozenset(iterable)
        for e in elements:
            if not isinstance(e, HFSet):
                raise TypeError(f'HFSet elements must be HFSet, got {e!r}')
        return get_canonical_store().intern(elements, cls)

    @property
    def sort_key(self) -> tuple:
        """Structural key: rank, then size, then the ordered element keys."""
        if self._key is None:
            self._key = (
                self.rank,
                len(self.elements),
                tuple(sorted(e.sort_key for e in self.elements)),
            )
        return self._key

    def ordered(self) -> tuple['HFSet', ...]:
        if self._ordered is None:
            self._ordered = tuple(
                sorted(self.elements, key=lambda e: e.sort_key)
            )
        return self._ordered

    def issubset(self, other: 'HFSet') -> bool:
        return self.elements <= other.elements

    def __le__(self, other: 'HFSet') -> bool:
        return self.issubset(other)

    def __iter__(self) -> Iterator['HFSet']:
        return iter(self.ordered())

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def __hash__(self) -> int:
        return self.canonical_id

    def __bool__(self) -> bool:
        return bool(self.elements)

    def __reduce__(self):
        return (HFSet.of, (tuple(self.ordered()),))

    def __repr__(self) -> str:
        from hf_workbench.resources.hfset import literal  # noqa: PLC0415

        return f'HFSet({literal.to_literal(self)})'

    def __str__(self) -> str:
        from hf_workbench.resources.hfset import literal  # noqa: PLC0415

        return literal.to_literal(self)


EMPTY = HFSet.of()

_numerals: list[HFSet] = [EMPTY]


def hf(*elements: HFSet) -> HFSet:
    return HFSet.of(elements)


def successor(x: HFSet) -> HFSet:
    return HFSet.of(x.elements | {x})


def numeral(n: int) -> HFSet:
    """
    Returns the von Neumann numeral n.

    :return: HFSet.
    """
    if n < 0:
        raise ValueError('Numerals are non-negative')
    while len(_numerals) <= n:
        _numerals.append(successor(_numerals[-1]))
    return _numerals[n]


def as_natural(x: HFSet) -> Optional[int]:
    n = len(x.elements)
    if x.rank != n:
        return None
    return n if numeral(n) is x else None


def pair(a: HFSet, b: HFSet) -> HFSet:
    return hf(hf(a), hf(a, b))


def as_pair(x: HFSet) -> Optional[tuple[HFSet, HFSet]]:
    if x._pair is not _UNSET:
        return x._pair
    found = None
    if len(x.elements) == 1:
        (u,) = x.elements
        if len(u.elements) == 1:
            (a,) = u.elements
            found = (a, a)
    elif len(x.elements) == 2:  # noqa: PLR2004
        u, v = x.elements
        single, double = (u, v) if len(u.elements) == 1 else (v, u)
        if (
            len(single.elements) == 1
            and len(double.elements) == 2  # noqa: PLR2004
        ):
            (a,) = single.elements
            if a in double.elements:
                (b,) = double.elements - {a}
                found = (a, b)
    x._pair = found
    return found


def project(x: HFSet, side: PairSide) -> HFSet:
    found = as_pair(x)
    if found is None:
        raise NotAPair(NOT_A_PAIR)
    return found[0] if side == PairSide.FIRST else found[1]


def make_tuple(xs: list[HFSet]) -> HFSet:
    """Right-nested tuple; a single element is its own 1-tuple."""
    if not xs:
        raise EmptyTuple(EMPTY_TUPLE)
    result = xs[-1]
    for x in reversed(xs[:-1]):
        result = pair(x, result)
    return result


def union_all(x: HFSet) -> HFSet:
    return HFSet.of(
        itertools.chain.from_iterable(e.elements for e in x.elements)
    )


def union(x: HFSet, y: HFSet) -> HFSet:
    return HFSet.of(x.elements | y.elements)


def intersect(x: HFSet, y: HFSet) -> HFSet:
    return HFSet.of(x.elements & y.elements)


def difference(x: HFSet, y: HFSet) -> HFSet:
    return HFSet.of(x.elements - y.elements)


def product(x: HFSet, y: HFSet) -> HFSet:
    return HFSet.of(pair(u, v) for u in x.elements for v in y.elements)


def pairs_of(x: HFSet) -> Iterator[tuple[HFSet, HFSet]]:
    for e in x.elements:
        found = as_pair(e)
        if found is not None:
            yield found


def domain(x: HFSet) -> HFSet:
    return HFSet.of(a for a, _ in pairs_of(x))


def range_of(x: HFSet) -> HFSet:
    return HFSet.of(b for _, b in pairs_of(x))


def image(y: HFSet, z: HFSet) -> HFSet:
    """y“{z} = {u | <z,u> in y}."""
    return HFSet.of(b for a, b in pairs_of(y) if a is z)


def set_algebra(
    kind: SetAlgebraKind, x: HFSet, y: Optional[HFSet] = None
) -> HFSet:
    if kind == SetAlgebraKind.UNION_ALL:
        return union_all(x)
    if kind == SetAlgebraKind.DOMAIN:
        return domain(x)
    if kind == SetAlgebraKind.RANGE:
        return range_of(x)
    if y is None:
        raise ValueError(SECOND_ARGUMENT_REQUIRED)
    binary = {
        SetAlgebraKind.BINARY_UNION: union,
        SetAlgebraKind.INTERSECT: intersect,
        SetAlgebraKind.DIFFERENCE: difference,
        SetAlgebraKind.PRODUCT: product,
        SetAlgebraKind.IMAGE: image,
    }
    return binary[kind](x, y)


def rank(x: HFSet) -> int:
    return x.rank


def transitive_closure(x: HFSet) -> HFSet:
    seen: set[HFSet] = set()
    frontier = list(x.elements)
    while frontier:
        e = frontier.pop()
        if e not in seen:
            seen.add(e)
            frontier.extend(e.elements)
    return HFSet.of(seen)


def is_transitive(x: HFSet) -> bool:
    return all(e.elements <= x.elements for e in x.elements)


def is_ordinal(x: HFSet) -> bool:
    """Transitive set of transitive sets."""
    return is_transitive(x) and all(is_transitive(e) for e in x.elements)


def powerset(x: HFSet, cap: int = 16) -> HFSet:
    if len(x) > cap:
        raise BudgetExceeded(POWERSET_TOO_LARGE)
    return HFSet.of(subsets(x))


def subsets(x: HFSet) -> Iterator[HFSet]:
    members = x.ordered()
    for size in range(len(members) + 1):
        for combo in itertools.combinations(members, size):
            yield HFSet.of(combo)


@functools.lru_cache(maxsize=None)
def set_add(x: HFSet, y: HFSet) -> HFSet:
    """Set-theoretic addition x + y = x ∪ {x + z | z ∈ y}."""
    n = as_natural(y)
    if n is not None:
        result = x
        for _ in range(n):
            result = successor(result)
        return result
    return HFSet.of(x.elements | {set_add(x, z) for z in y.elements})
