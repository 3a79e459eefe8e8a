from typing import Any, Mapping

from hf_workbench.resources.kripke.model import Frame, Node


class KName:
    """
    A name based at node p: a graph sending each q in the cone of p to a
    finite set of names based at q. Names compare literally, by base and
    graph; `stage` is the least construction rank.
    """

    __slots__ = ('frame', 'base', 'graph', 'stage', '_key', '_hash')

    def __init__(
        self,
        frame: Frame,
        base: Node,
        graph: Mapping[Node, frozenset['KName']],
    ):
        self.frame = frame
        self.base = base
        self.graph = dict(graph)
        self.stage = max(
            (h.stage + 1 for hs in self.graph.values() for h in hs),
            default=0,
        )
        self._key = (base, frozenset(self.graph.items()))
        self._hash = hash(self._key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KName):
            return NotImplemented
        return self is other or (
            self._hash == other._hash and self._key == other._key
        )

    def __hash__(self) -> int:
        return self._hash

    def __getitem__(self, q: Node) -> frozenset['KName']:
        return self.graph[q]

    def __repr__(self) -> str:
        return f'KName({self.base}, stage={self.stage})'

    def dump(self) -> dict[str, Any]:
        """JSON form: base plus, per node, the dumped member names."""
        return {
            'base': self.base,
            'graph': {
                q: sorted((h.dump() for h in hs), key=repr)
                for q, hs in self.graph.items()
            },
        }
