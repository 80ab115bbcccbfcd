"""Brute-force exact solver: the ground truth the other engines are tested
against.  Deliberately free of pruning beyond the candidate set."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge
from .model import Instance
from .search import first_conflict_free

DEFAULT_CANDIDATE_CAP = 10**8


@dataclass(frozen=True)
class Verdict:
    yes: bool
    solution: frozenset[Edge] | None = None

    @staticmethod
    def of(solution) -> "Verdict":
        return Verdict(True, frozenset(solution))

    @staticmethod
    def no() -> "Verdict":
        return Verdict(False)


def solve_min(inst: Instance, max_candidates: int = DEFAULT_CANDIDATE_CAP,
              parallel: int = 1) -> Verdict:
    """Enumerate subsets of non-edges of G by size, lexicographically, and
    return the first that verifies: a deterministic minimum-cardinality
    solution.  Intended for desk-scale instances only.
    """
    sol = first_conflict_free(inst, inst.non_edges(), inst.k,
                              max_candidates=max_candidates, parallel=parallel)
    if sol is None:
        return Verdict.no()
    return Verdict.of(sol)
