import itertools
from typing import TYPE_CHECKING, Callable

from hf_workbench.resources.shared.repository import MemoRepository

if TYPE_CHECKING:
    from hf_workbench.resources.hfset.model import HFSet


class CanonicalStore(MemoRepository[frozenset, 'HFSet']):
    """
    Global interning table: one HFSet object per extension.

    Keys are frozensets of already-interned elements, so key hashing and
    comparison reduce to element identity.
    """

    def __init__(self):
        super().__init__()
        self._ids = itertools.count()

    def intern(
        self,
        elements: frozenset,
        factory: Callable[[frozenset, int], 'HFSet'],
    ) -> 'HFSet':
        with self._lock:
            found = self._items.get(elements)
            if found is None:
                found = factory(elements, next(self._ids))
                self._items[elements] = found
            return found


_store = CanonicalStore()


def get_canonical_store() -> CanonicalStore:
    return _store
