"""Metric embedding of G in Gamma's shortest-path metric.

Houses instances, conflict detection, dilation and solution verification.
All stretch comparisons use exact rational arithmetic (cross-multiplied
integers); floating point never touches a threshold decision.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import INF, Edge, Graph, norm_edge

Stretch = Fraction


class MetricUndefinedError(ValueError):
    """Gamma is disconnected, so the shortest-path metric is undefined."""


class InstanceError(ValueError):
    """Malformed instance data (bad G edges, negative budget, t < 1)."""


@dataclass(frozen=True)
class Instance:
    """An immutable (G, Gamma, k, t) instance with the metric precomputed.

    ``dist_gamma[u][v]`` is the Gamma shortest-path distance; every G edge
    (u, v) is embedded with weight ``dist_gamma[u][v]``.
    """

    gamma: Graph
    g_edges: frozenset[Edge]
    k: int
    t: Stretch
    dist_gamma: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.gamma.n

    def non_edges(self) -> list[Edge]:
        """Non-edges of G in lexicographic order (candidate solution edges)."""
        present = self.g_edges
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if (u, v) not in present]

    def g_adjacency(self, extra: Iterable[Edge] = ()) -> list[list[tuple[int, int]]]:
        """Weighted adjacency of G + extra, edge weights taken from the metric."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v in self.g_edges:
            w = self.dist_gamma[u][v]
            adj[u].append((v, w))
            adj[v].append((u, w))
        for u, v in extra:
            w = self.dist_gamma[u][v]
            adj[u].append((v, w))
            adj[v].append((u, w))
        return adj


@dataclass(frozen=True)
class ConflictAnalysis:
    """The conflict graph: Gamma-adjacent pairs violating the stretch bound."""

    conflict_edges: frozenset[Edge]
    conflict_vertices: tuple[int, ...]

    def __bool__(self) -> bool:
        return bool(self.conflict_edges)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str | None = None


def normalize_solution(edges: Iterable[Edge], n: int) -> frozenset[Edge]:
    out = set()
    for u, v in edges:
        if u == v:
            raise InstanceError(f"solution edge ({u}, {v}) is a self-loop")
        if not (0 <= u < n and 0 <= v < n):
            raise InstanceError(f"solution edge ({u}, {v}) out of range")
        out.add(norm_edge(u, v))
    return frozenset(out)


def build_instance(gamma: Graph, g_edges: Iterable[Edge], k: int,
                   t: Stretch | int) -> Instance:
    """Validate and assemble an instance; fills the n x n metric table."""
    t = Fraction(t)
    if k < 0:
        raise InstanceError("budget k must be nonnegative")
    if t < 1:
        raise InstanceError("stretch t must be at least 1")
    seen: set[Edge] = set()
    for u, v in g_edges:
        if u == v:
            raise InstanceError(f"G edge ({u}, {v}) is a self-loop")
        if not (0 <= u < gamma.n and 0 <= v < gamma.n):
            raise InstanceError(f"G edge ({u}, {v}) out of range [0, {gamma.n})")
        e = norm_edge(u, v)
        if e in seen:
            raise InstanceError(f"duplicate G edge {e}")
        seen.add(e)
    dist = []
    for source in range(gamma.n):
        row = gamma.weighted_distances(source)
        if INF in row:
            raise MetricUndefinedError("metric undefined: gamma is disconnected")
        dist.append(tuple(int(d) for d in row))
    return Instance(gamma=gamma, g_edges=frozenset(seen), k=k, t=t,
                    dist_gamma=tuple(dist))


def stretch_leq(dg: float, dgamma: int, t: Stretch) -> bool:
    """Exact test of dg <= t * dgamma; an infinite dg always fails."""
    if dg == INF:
        return False
    return t.denominator * dg <= t.numerator * dgamma


def _dijkstra(adj: list[list[tuple[int, int]]], source: int) -> list[float]:
    dist: list[float] = [INF] * len(adj)
    dist[source] = 0
    heap = [(0, source)]
    while heap:
        du, u = heapq.heappop(heap)
        if du > dist[u]:
            continue
        for v, wt in adj[u]:
            nd = du + wt
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def adjacent_conflicts(inst: Instance, s: Iterable[Edge] = ()) -> ConflictAnalysis:
    """All Gamma-adjacent pairs whose G+S distance exceeds t * d_Gamma."""
    s = normalize_solution(s, inst.n)
    adj = inst.g_adjacency(s)
    rows: dict[int, list[float]] = {}
    conflicts = []
    for u, v in sorted(inst.gamma.edges):
        row = rows.get(u)
        if row is None:
            row = rows[u] = _dijkstra(adj, u)
        if not stretch_leq(row[v], inst.dist_gamma[u][v], inst.t):
            conflicts.append((u, v))
    vertices = sorted({x for e in conflicts for x in e})
    return ConflictAnalysis(frozenset(conflicts), tuple(vertices))


def is_conflict_free(inst: Instance, s: Iterable[Edge] = ()) -> bool:
    """Early-exiting emptiness check of adjacent_conflicts (hot path)."""
    adj = inst.g_adjacency(s)
    dist_gamma = inst.dist_gamma
    num, den = inst.t.numerator, inst.t.denominator
    rows: dict[int, list[float]] = {}
    for u, v in sorted(inst.gamma.edges):
        row = rows.get(u)
        if row is None:
            row = rows[u] = _dijkstra(adj, u)
        d = row[v]
        if d == INF or den * d > num * dist_gamma[u][v]:
            return False
    return True


def dilation(inst: Instance, s: Iterable[Edge] = ()) -> Stretch | float:
    """Max over all pairs of d_{G+S}(u, v) / d_Gamma(u, v); inf if disconnected."""
    s = normalize_solution(s, inst.n)
    adj = inst.g_adjacency(s)
    worst = Fraction(1)
    for u in range(inst.n):
        row = _dijkstra(adj, u)
        for v in range(u + 1, inst.n):
            if row[v] == INF:
                return INF
            ratio = Fraction(int(row[v]), inst.dist_gamma[u][v])
            if ratio > worst:
                worst = ratio
    return worst


def verify_solution(inst: Instance, s: Iterable[Edge]) -> VerifyResult:
    """Check budget, disjointness from G, and adjacent-conflict-freeness.

    Only Gamma-adjacent pairs are examined; that certifies dilation <= t
    for every pair, since a conflict-free graph is adjacent-conflict-free
    and vice versa.
    """
    s = normalize_solution(s, inst.n)
    overlap = s & inst.g_edges
    if overlap:
        return VerifyResult(False, "overlaps-G")
    if len(s) > inst.k:
        return VerifyResult(False, "budget-exceeded")
    conflicts = adjacent_conflicts(inst, s)
    if conflicts.conflict_edges:
        u, v = min(conflicts.conflict_edges)
        return VerifyResult(False, f"conflict({u},{v})")
    return VerifyResult(True)
