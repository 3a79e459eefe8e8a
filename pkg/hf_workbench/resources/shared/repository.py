import threading
from typing import Callable, Generic, Hashable, Iterator, TypeVar

K = TypeVar('K', bound=Hashable)
V = TypeVar('V')


class MemoRepository(Generic[K, V]):
    """
    Thread-safe keyed store used for interning and memoization.

    Reads and writes are synchronized; factories run outside the lock so a
    factory may recurse into the same repository. When two threads race on
    one key the first stored value wins and both callers receive it.
    """

    def __init__(self):
        self._items: dict[K, V] = {}
        self._lock = threading.RLock()

    def get(self, key: K) -> V | None:
        with self._lock:
            return self._items.get(key)

    def put(self, key: K, value: V) -> V:
        with self._lock:
            return self._items.setdefault(key, value)

    def get_or_create(self, key: K, factory: Callable[[], V]) -> V:
        with self._lock:
            found = self._items.get(key)
        if found is not None:
            return found
        return self.put(key, factory())

    def delete(self, key: K) -> bool:
        with self._lock:
            return self._items.pop(key, None) is not None

    def clear(self) -> None:
        with self._lock:
            self._items.clear()

    def keys(self) -> Iterator[K]:
        with self._lock:
            return iter(list(self._items))

    def __len__(self) -> int:
        with self._lock:
            return len(self._items)

    def __contains__(self, key: K) -> bool:
        with self._lock:
            return key in self._items
