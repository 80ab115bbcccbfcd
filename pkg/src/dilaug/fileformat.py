"""Instance, solution and label file parsing/serialization.

Instance format (UTF-8, newline-delimited, 1-based vertex ids):

    c <comment>            ignored
    p dilaug <n> <k> <p>/<q>   exactly once, first non-comment line
    e <u> <v> <w>          Gamma edge, integer weight w >= 1
    g <u> <v>              G edge
    l <v> <label>          optional vertex label (generator sidecar)

Solution files contain lines ``s <u> <v>``.  Internally vertices are
0-based; the translation happens here and only here.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import Edge, Graph, norm_edge
from .model import Instance, InstanceError, MetricUndefinedError, build_instance


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


def parse_stretch(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            t = Fraction(int(num), int(den))
        else:
            t = Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad stretch value {text!r}") from exc
    if t < 1:
        raise ParseError(f"stretch {text} is below 1")
    return t


def _vertex(tok: str, n: int, lineno: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"bad vertex id {tok!r}", lineno)
    if not (1 <= v <= n):
        raise ParseError(f"vertex {v} out of range [1, {n}]", lineno)
    return v - 1


def parse_instance(text: str, collect_labels: dict[int, str] | None = None) -> Instance:
    header = None
    gamma_edges: dict[Edge, int] = {}
    g_edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if header is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 5 or parts[1] != "dilaug":
                raise ParseError("header must be 'p dilaug <n> <k> <t>'", lineno)
            try:
                n, k = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("n and k must be integers", lineno)
            if n < 1 or k < 0:
                raise ParseError("need n >= 1 and k >= 0", lineno)
            try:
                t = parse_stretch(parts[4])
            except ParseError as exc:
                raise ParseError(str(exc), lineno) from None
            header = (n, k, t)
            continue
        if header is None:
            raise ParseError("header must precede edge lines", lineno)
        n = header[0]
        if kind == "e":
            if len(parts) != 4:
                raise ParseError("gamma edge line must be 'e <u> <v> <w>'", lineno)
            u, v = _vertex(parts[1], n, lineno), _vertex(parts[2], n, lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            try:
                w = int(parts[3])
            except ValueError:
                raise ParseError(f"bad weight {parts[3]!r}", lineno)
            if w < 1:
                raise ParseError(f"weight {w} must be >= 1", lineno)
            e = norm_edge(u, v)
            if e in gamma_edges:
                raise ParseError("duplicate gamma edge", lineno)
            gamma_edges[e] = w
        elif kind == "g":
            if len(parts) != 3:
                raise ParseError("G edge line must be 'g <u> <v>'", lineno)
            u, v = _vertex(parts[1], n, lineno), _vertex(parts[2], n, lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            e = norm_edge(u, v)
            if e in g_edges:
                raise ParseError("duplicate G edge", lineno)
            g_edges.add(e)
        elif kind == "l":
            if len(parts) < 3:
                raise ParseError("label line must be 'l <v> <label>'", lineno)
            v = _vertex(parts[1], n, lineno)
            if collect_labels is not None:
                collect_labels[v] = " ".join(parts[2:])
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise ParseError("missing 'p dilaug' header")
    n, k, t = header
    gamma = Graph(n, gamma_edges, gamma_edges)
    try:
        return build_instance(gamma, g_edges, k, t)
    except MetricUndefinedError as exc:
        raise ParseError(str(exc)) from exc
    except InstanceError as exc:
        raise ParseError(str(exc)) from exc


def serialize_instance(inst: Instance, labels: dict[int, str] | None = None) -> str:
    t = inst.t
    t_text = f"{t.numerator}/{t.denominator}" if t.denominator != 1 else str(t.numerator)
    lines = [f"p dilaug {inst.n} {inst.k} {t_text}"]
    for u, v in sorted(inst.gamma.edges):
        w = inst.gamma.weight.get((u, v), 1)
        lines.append(f"e {u + 1} {v + 1} {w}")
    for u, v in sorted(inst.g_edges):
        lines.append(f"g {u + 1} {v + 1}")
    for v in sorted(labels or {}):
        lines.append(f"l {v + 1} {labels[v]}")
    return "\n".join(lines) + "\n"


def parse_solution(text: str, n: int) -> frozenset[Edge]:
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] != "s" or len(parts) != 3:
            raise ParseError("solution line must be 's <u> <v>'", lineno)
        u, v = _vertex(parts[1], n, lineno), _vertex(parts[2], n, lineno)
        if u == v:
            raise ParseError("self-loop", lineno)
        edges.add(norm_edge(u, v))
    return frozenset(edges)


def serialize_solution(edges) -> str:
    return "".join(f"s {u + 1} {v + 1}\n" for u, v in sorted(edges))
