import itertools
import logging
from typing import Iterator, Optional

from hf_workbench.resources.fullmodel.model import KName
from hf_workbench.resources.fullmodel.names import restrict
from hf_workbench.resources.fullmodel.schemas import TOO_MANY_NAMES
from hf_workbench.resources.kripke.model import Frame, Node
from hf_workbench.resources.shared.errors import BudgetExceeded
from hf_workbench.settings import get_settings

logger = logging.getLogger(__name__)

Universe = dict[Node, list[KName]]


def all_subsets(pool: list[KName]) -> Iterator[frozenset[KName]]:
    for size in range(len(pool) + 1):
        for chosen in itertools.combinations(pool, size):
            yield frozenset(chosen)


class UniverseBuilder:
    """
    Generates M^p at a finite cutoff: level k holds every coherent name
    whose graph entries come from level k - 1, so level k is exactly the
    names of stage < k.
    """

    def __init__(self, frame: Frame, budget: Optional[int] = None):
        self.frame = frame
        self.budget = get_settings().NAME_BUDGET if budget is None else budget
        self.generated = 0

    def coherent(self, graph: dict[Node, frozenset[KName]]) -> bool:
        return all(
            restrict(h, r) in graph[r]
            for q, members in graph.items()
            for h in members
            for r in self.frame.cone(q)
        )

    def graphs(
        self, p: Node, previous: Universe
    ) -> Iterator[dict[Node, frozenset[KName]]]:
        # nodes with smaller cones first, so restrictions are fixed early
        order = sorted(
            self.frame.cone(p), key=lambda q: len(self.frame.cone(q))
        )

        def extend(i: int, chosen: dict[Node, frozenset[KName]]):
            if i == len(order):
                if self.coherent(chosen):
                    yield dict(chosen)
                return
            q = order[i]
            pool = [
                h
                for h in previous[q]
                if all(
                    restrict(h, r) in chosen[r]
                    for r in self.frame.cone(q)
                    if r in chosen
                )
            ]
            for subset in all_subsets(pool):
                self.generated += 1
                if self.generated > self.budget:
                    raise BudgetExceeded(
                        f'{TOO_MANY_NAMES}: {self.budget}'
                    )
                chosen[q] = subset
                yield from extend(i + 1, chosen)
                del chosen[q]

        yield from extend(0, {})

    def build(self, cutoff: int) -> Universe:
        levels: Universe = {p: [] for p in self.frame.nodes}
        for k in range(1, cutoff + 1):
            try:
                levels = {
                    p: [
                        KName(self.frame, p, graph)
                        for graph in self.graphs(p, levels)
                    ]
                    for p in self.frame.nodes
                }
            except BudgetExceeded as error:
                logger.warning('name universe stopped at level %d', k - 1)
                raise BudgetExceeded(error.message, partial=levels)
            logger.debug(
                'level %d: %s',
                k,
                {p: len(names) for p, names in levels.items()},
            )
        return levels


def build_universe(
    frame: Frame, cutoff: int, budget: Optional[int] = None
) -> Universe:
    """
    Every name of stage < cutoff at every node, deduplicated by literal
    graph equality.

    :return: dict from node to its names.
    """
    return UniverseBuilder(frame, budget).build(cutoff)
