"""Maximum bipartite matching by augmenting paths (Kuhn's algorithm)."""
from __future__ import annotations

from typing import Hashable, Sequence


def max_matching(options: Sequence[Sequence[Hashable]]) -> list[Hashable | None]:
    """Match each left vertex ``i`` to one of ``options[i]`` with no right vertex reused.

    Options are tried in the given order, so the result is deterministic.
    Returns the chosen right vertex per left vertex (None when unmatched).
    """
    owner: dict[Hashable, int] = {}

    def augment(i: int, seen: set) -> bool:
        for r in options[i]:
            if r in seen:
                continue
            seen.add(r)
            if r not in owner or augment(owner[r], seen):
                owner[r] = i
                return True
        return False

    for i in range(len(options)):
        augment(i, set())
    chosen: list[Hashable | None] = [None] * len(options)
    for r, i in owner.items():
        chosen[i] = r
    return chosen


def perfect_matching(options: Sequence[Sequence[Hashable]]) -> list[Hashable] | None:
    """Like ``max_matching`` but None unless every left vertex is matched."""
    chosen = max_matching(options)
    if any(c is None for c in chosen):
        return None
    return chosen  # type: ignore[return-value]
