import random
from functools import lru_cache

from hf_workbench.resources.hfset.model import (
    EMPTY,
    HFSet,
    subsets,
    transitive_closure,
)

_ATTEMPTS = 8


@lru_cache(maxsize=8)
def hfsets_of_rank(r: int) -> tuple[HFSet, ...]:
    """
    All HF sets of rank < r, that is the members of V_r, in canonical
    order.
    """
    if r <= 0:
        return ()
    below = HFSet.of(hfsets_of_rank(r - 1))
    return tuple(sorted(subsets(below), key=lambda x: x.sort_key))


def random_subset(rng: random.Random, pool: list[HFSet]) -> HFSet:
    return HFSet.of(e for e in pool if rng.random() < 0.5)  # noqa: PLR2004


def random_hfset(rng: random.Random, max_trcl: int = 4) -> HFSet:
    """
    Draws an HF set whose transitive closure has at most `max_trcl`
    members.
    """
    target = rng.randint(0, max_trcl)
    pool: list[HFSet] = []
    while len(pool) < target:
        for _ in range(_ATTEMPTS):
            candidate = random_subset(rng, pool)
            if candidate not in pool:
                pool.append(candidate)
                break
        else:
            break
    if not pool:
        return EMPTY
    return random_subset(rng, pool)


def random_hfsets(
    rng: random.Random, count: int, max_trcl: int = 4
) -> list[HFSet]:
    return [random_hfset(rng, max_trcl) for _ in range(count)]


def small_sets(max_trcl: int) -> list[HFSet]:
    """Every HF set of rank < 4 whose transitive closure fits `max_trcl`."""
    return [
        x
        for x in hfsets_of_rank(4)
        if len(transitive_closure(x)) <= max_trcl
    ]
