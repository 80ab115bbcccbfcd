"""Shared fixtures and independent oracles for the test suite.

The helpers here deliberately avoid the library's own shortest-path and
matching code: networkx and tiny brute-force routines act as the second
opinion the implementation is checked against.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from dilaug.graph import Graph, norm_edge
from dilaug.model import Instance, build_instance


ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def nx_graph(n: int, edges, weights=None) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for u, v in edges:
        w = (weights or {}).get(norm_edge(u, v), 1)
        g.add_edge(u, v, weight=w)
    return g


def nx_apsp(n: int, edges, weights=None) -> dict:
    """All-pairs weighted distances via networkx; missing pair = inf."""
    g = nx_graph(n, edges, weights)
    dist = dict(nx.all_pairs_dijkstra_path_length(g, weight="weight"))
    return {(u, v): dist.get(u, {}).get(v, math.inf)
            for u in range(n) for v in range(n)}


def embedded_apsp(inst: Instance, s=()) -> dict:
    """All-pairs distances of G+S under the metric-embedded weights."""
    edges = set(inst.g_edges) | {norm_edge(u, v) for u, v in s}
    weights = {e: inst.dist_gamma[e[0]][e[1]] for e in edges}
    return nx_apsp(inst.n, edges, weights)


def all_pairs_within_stretch(inst: Instance, s=()) -> bool:
    dist = embedded_apsp(inst, s)
    t = inst.t
    for u in range(inst.n):
        for v in range(u + 1, inst.n):
            d = dist[(u, v)]
            if d == math.inf or t.denominator * d > t.numerator * inst.dist_gamma[u][v]:
                return False
    return True


def brute_max_matching(n: int, edges) -> int:
    """Maximum matching size by exhaustive search (tiny graphs only)."""
    edges = sorted({norm_edge(u, v) for u, v in edges})
    best = 0
    for size in range(len(edges), 0, -1):
        if size <= best:
            break
        for combo in combinations(edges, size):
            seen = set()
            ok = True
            for u, v in combo:
                if u in seen or v in seen:
                    ok = False
                    break
                seen.update((u, v))
            if ok:
                best = max(best, size)
                break
    return best


def enumerate_path_distance(g: Graph, source: int, target: int) -> float:
    """Min weighted length over all simple paths, by exhaustive DFS."""
    best = [math.inf]

    def walk(u, used, total):
        if total >= best[0]:
            return
        if u == target:
            best[0] = total
            return
        for v in g.neighbors(u):
            if v not in used:
                walk(v, used | {v}, total + g.edge_weight(u, v))

    walk(source, {source}, 0)
    return best[0]


@pytest.fixture
def triangle_gamma() -> Graph:
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def triangle_path_instance(triangle_gamma) -> Instance:
    """Gamma a triangle, G the path 0-1-2: the running example."""
    return build_instance(triangle_gamma, [(0, 1), (1, 2)], 1, Fraction(3, 2))


@pytest.fixture
def star_instance() -> Instance:
    """Gamma = K_{1,3} with center 0, G edgeless."""
    gamma = Graph(4, [(0, 1), (0, 2), (0, 3)])
    return build_instance(gamma, [], 2, Fraction(2))
