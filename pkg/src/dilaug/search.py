"""Shared deterministic subset enumeration used by the exact engines.

Candidates are tried in order of increasing size, lexicographically within
a size.  With ``parallel > 1`` the candidate stream is evaluated in chunks
across a thread pool; the reported hit is always the one the sequential
order would find first, so results are independent of scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, islice
from typing import Iterator, Sequence

from .graph import Edge
from .model import Instance, is_conflict_free

_CHUNK = 64


class SearchBudgetExceeded(RuntimeError):
    """The candidate cap was hit before the enumeration finished."""


def iter_subsets(candidates: Sequence[Edge], max_size: int) -> Iterator[tuple[Edge, ...]]:
    """All subsets of size 0..max_size, sizes ascending, lexicographic within."""
    ordered = sorted(candidates)
    for size in range(max_size + 1):
        yield from combinations(ordered, size)


def first_conflict_free(inst: Instance, candidates: Sequence[Edge], k: int,
                        committed: frozenset[Edge] = frozenset(),
                        max_candidates: int | None = None,
                        parallel: int = 1) -> frozenset[Edge] | None:
    """First subset S of ``candidates`` (|S| <= k) making G+committed+S
    adjacent-conflict-free, in the canonical order; None if there is none.
    """
    subsets = iter_subsets(candidates, k)
    examined = 0

    def check(combo: tuple[Edge, ...]) -> bool:
        return is_conflict_free(inst, committed.union(combo))

    if parallel <= 1:
        for combo in subsets:
            examined += 1
            if max_candidates is not None and examined > max_candidates:
                raise SearchBudgetExceeded("budget exceeded")
            if check(combo):
                return frozenset(committed.union(combo))
        return None

    with ThreadPoolExecutor(max_workers=parallel) as pool:
        while True:
            chunk = list(islice(subsets, _CHUNK * parallel))
            if not chunk:
                return None
            examined += len(chunk)
            if max_candidates is not None and examined > max_candidates:
                raise SearchBudgetExceeded("budget exceeded")
            for combo, hit in zip(chunk, pool.map(check, chunk)):
                if hit:
                    return frozenset(committed.union(combo))
