"""FPT pipeline for Dilation 2-Augmentation when G is K_{d,d}-free.

Stages: conflict graph -> matching-based vertex cover R -> guess of the
solution edges inside R -> recursive branching on blocking sets around
high-conflict-degree cover vertices -> twin reduction -> bounded final
enumeration.  Every branch strictly decreases the remaining budget, and
the cover never grows past five times the original budget.

K_{d,d}-freeness of G is a caller contract.  It is not verified up front
(detection is expensive); if the blocking-set construction ever produces
d witnesses, which is impossible for K_{d,d}-free inputs, the engine
aborts loudly instead of answering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Edge, Graph, greedy_maximal_matching, norm_edge
from .model import Instance, adjacent_conflicts, build_instance, verify_solution
from .oracle import Verdict
from .search import iter_subsets
from .structured import EngineInapplicable

TWO = Fraction(2)


class NotKddFree(RuntimeError):
    """Blocking-set growth reached d witnesses: the input graph contains a
    K_{d,d}, violating the caller contract."""


@dataclass(frozen=True)
class AnnotatedInstance:
    """A branch node: the base instance plus edges committed so far, the
    remaining budget and the current cover R.  Solution edges added below
    this node must have at most one endpoint in R.
    """

    base: Instance
    added: frozenset[Edge]
    k: int
    r: tuple[int, ...]

    @property
    def g_edges(self) -> frozenset[Edge]:
        return self.base.g_edges | self.added


@dataclass(frozen=True)
class BlockingSet:
    """Witnesses w_1..w_delta for a cover vertex v: any small solution must
    use one of the edges (v, w_i)."""

    center: int
    witnesses: tuple[int, ...]


@dataclass(frozen=True)
class TwinSignature:
    a: frozenset[int]  # G-neighbors at embedded distance 1 inside V_c
    b: frozenset[int]  # Gamma-neighbors in V_c that are not G-adjacent


@dataclass(frozen=True)
class ReducedSearch:
    """Outcome of the twin reduction: candidate endpoints for the final
    enumeration, plus the class representatives that were kept."""

    candidates: tuple[int, ...]
    representatives: tuple[int, ...]
    class_count: int


@dataclass
class BranchStats:
    """Instrumentation for the structural invariants of the recursion."""

    nodes: int = 0
    max_cover: int = 0
    cover_violations: int = 0
    budget_violations: int = 0
    cover_bound: int = 0

    def note_node(self, cover_size: int) -> None:
        self.nodes += 1
        self.max_cover = max(self.max_cover, cover_size)
        if cover_size > self.cover_bound:
            self.cover_violations += 1

    def note_child(self, parent_k: int, child_k: int) -> None:
        if child_k >= parent_k:
            self.budget_violations += 1


def f_value(i: int, k: int, d: int) -> int:
    """Conflict-count threshold used by the blocking-set construction."""
    if not (0 <= i <= d):
        raise ValueError(f"i={i} out of range [0, {d}]")
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    if i == d:
        return d
    if i == d - 1:
        return d * k + k * k + k
    return (d * k ** (d - i) + k ** (d - i + 1)
            + 2 * sum(k ** j for j in range(2, d - i + 1)) + k)


def _conflict_graph(ann: AnnotatedInstance):
    return adjacent_conflicts(ann.base, ann.added)


def find_blocking_set(ann: AnnotatedInstance, v: int, d: int) -> BlockingSet | None:
    """Grow the witness sequence for a high-conflict-degree cover vertex.

    Returns None when no vertex of I has more than f(1) G-neighbors among
    v's conflict partners: in that case the branch is a no-instance.
    Raises NotKddFree if d witnesses ever accumulate.
    """
    conflicts = _conflict_graph(ann)
    g = Graph(ann.base.n, ann.g_edges)
    in_r = set(ann.r)
    i_set = [x for x in range(ann.base.n) if x not in in_r]
    u_set = {x for x in i_set if norm_edge(v, x) in conflicts.conflict_edges}
    if len(u_set) <= f_value(0, ann.k, d):
        raise ValueError("find_blocking_set needs deg_C(v) in I above f(0)")
    witnesses: list[int] = []
    u_cur = set(u_set)
    step = 1
    while True:
        best, best_count = None, -1
        taken = set(witnesses)
        for w in i_set:
            if w in taken:
                continue
            count = sum(1 for x in g.neighbors(w) if x in u_cur)
            if count > best_count:
                best, best_count = w, count
        if best is None or best_count <= f_value(step, ann.k, d):
            if step == 1:
                return None
            break
        witnesses.append(best)
        u_cur &= set(g.neighbors(best))
        if len(witnesses) == d:
            raise NotKddFree("input not K_{d,d}-free: found d witnesses")
        step += 1
    return BlockingSet(center=v, witnesses=tuple(witnesses))


def branch_blocking(ann: AnnotatedInstance, bs: BlockingSet) -> list[AnnotatedInstance]:
    """Children per the guessing rule: commit edges from the center to a
    non-empty witness subset W', plus any affordable set of non-edges
    between W' and the rest of the new cover.  Budget strictly drops.
    """
    v = bs.center
    g_cur = ann.g_edges
    usable = sorted(w for w in bs.witnesses if norm_edge(v, w) not in g_cur)
    children = []
    for size_w in range(1, min(len(usable), ann.k) + 1):
        for wprime in combinations(usable, size_w):
            wset = set(wprime)
            pool = wset | (set(ann.r) - {v})
            eligible = sorted(
                (a, b) for a in range(ann.base.n) for b in range(a + 1, ann.base.n)
                if (a, b) not in g_cur
                and ((a in wset and b in pool) or (b in wset and a in pool)))
            budget_left = ann.k - size_w
            commit_w = frozenset(norm_edge(v, w) for w in wprime)
            for size_e in range(budget_left + 1):
                for ex in combinations(eligible, size_e):
                    children.append(AnnotatedInstance(
                        base=ann.base,
                        added=ann.added | commit_w | frozenset(ex),
                        k=budget_left - size_e,
                        r=tuple(sorted(set(ann.r) | wset))))
    return children


def twin_reduce(ann: AnnotatedInstance) -> ReducedSearch:
    """Partition the conflict-free vertices by twin signature and keep one
    representative per class.

    Implemented as a candidate-endpoint restriction rather than a literal
    deletion from Gamma: deleting vertices could change d_Gamma between
    survivors and silently alter edge weights, whereas the replacement
    argument only relocates solution endpoints onto representatives.
    """
    conflicts = _conflict_graph(ann)
    vc = set(conflicts.conflict_vertices)
    g_cur = ann.g_edges
    dist = ann.base.dist_gamma
    classes: dict[tuple[frozenset[int], frozenset[int]], list[int]] = {}
    for v in range(ann.base.n):
        if v in vc:
            continue
        a = frozenset(u for u in vc
                      if norm_edge(u, v) in g_cur and dist[u][v] == 1)
        b = frozenset(u for u in vc
                      if norm_edge(u, v) not in g_cur and dist[u][v] == 1)
        classes.setdefault((a, b), []).append(v)
    reps = tuple(sorted(min(members) for members in classes.values()))
    return ReducedSearch(candidates=tuple(sorted(vc | set(reps))),
                         representatives=reps, class_count=len(classes))


def _final_enumeration(ann: AnnotatedInstance, twin_mode: str) -> frozenset[Edge] | None:
    if twin_mode == "restrict":
        red = twin_reduce(ann)
        allowed = set(red.candidates)
    elif twin_mode == "delete":
        return _final_enumeration_deleted(ann)
    elif twin_mode == "off":
        allowed = set(range(ann.base.n))
    else:
        raise ValueError(f"unknown twin_mode {twin_mode!r}")
    in_r = set(ann.r)
    g_cur = ann.g_edges
    candidates = [
        (a, b) for a in range(ann.base.n) for b in range(a + 1, ann.base.n)
        if (a, b) not in g_cur and a in allowed and b in allowed
        and not (a in in_r and b in in_r)]
    for combo in iter_subsets(candidates, ann.k):
        extra = ann.added | frozenset(combo)
        if not adjacent_conflicts(ann.base, extra):
            return frozenset(combo)
    return None


def _final_enumeration_deleted(ann: AnnotatedInstance) -> frozenset[Edge] | None:
    """Experimental literal-deletion variant of the twin rule: actually
    remove unmarked twin-class members from Gamma and G and search there.
    Kept behind a flag; the restriction variant is the default because
    deletion can perturb the surviving metric.
    """
    red = twin_reduce(ann)
    keep = sorted(set(red.candidates) | set())
    # Unmarked vertices are those outside the candidate set.
    old_ids = keep
    new_of = {old: new for new, old in enumerate(old_ids)}
    gamma = ann.base.gamma
    gamma_edges = [(new_of[u], new_of[v]) for u, v in gamma.edges
                   if u in new_of and v in new_of]
    weights = {(new_of[u], new_of[v]): gamma.weight.get(norm_edge(u, v), 1)
               for u, v in gamma.edges if u in new_of and v in new_of}
    g_edges = [(new_of[u], new_of[v]) for u, v in ann.g_edges
               if u in new_of and v in new_of]
    gamma_red = Graph(len(old_ids), gamma_edges, weights)
    if not gamma_red.is_connected():
        # Deleting twins disconnected the metric; the literal reading is
        # undefined here, fall back to the restriction semantics.
        return _final_enumeration(ann, "restrict")
    sub = build_instance(gamma_red, g_edges, ann.k, ann.base.t)
    in_r = {new_of[x] for x in ann.r if x in new_of}
    candidates = [e for e in sub.non_edges()
                  if not (e[0] in in_r and e[1] in in_r)]
    for combo in iter_subsets(candidates, ann.k):
        if not adjacent_conflicts(sub, combo):
            return frozenset(norm_edge(old_ids[a], old_ids[b]) for a, b in combo)
    return None


def _solve_annotated(ann: AnnotatedInstance, d: int, k0: int,
                     stats: BranchStats, twin_mode: str) -> frozenset[Edge] | None:
    stats.note_node(len(ann.r))
    conflicts = _conflict_graph(ann)
    if not conflicts:
        return frozenset()
    if ann.k == 0:
        return None
    in_r = set(ann.r)
    f0 = f_value(0, ann.k, d)
    high = None
    for v in ann.r:
        deg = sum(1 for u, w in conflicts.conflict_edges
                  for x, y in ((u, w), (w, u)) if x == v and y not in in_r)
        if deg > f0:
            high = v
            break
    if high is not None:
        bs = find_blocking_set(ann, high, d)
        if bs is None:
            return None
        for child in branch_blocking(ann, bs):
            stats.note_child(ann.k, child.k)
            below = _solve_annotated(child, d, k0, stats, twin_mode)
            if below is not None:
                return (child.added - ann.added) | below
        return None
    return _final_enumeration(ann, twin_mode)


def solve_kdd(inst: Instance, d: int, twin_mode: str = "restrict",
              stats: BranchStats | None = None) -> Verdict:
    """Exact engine for t = 2 on a K_{d,d}-free G (caller contract)."""
    if inst.t != TWO:
        raise EngineInapplicable("kdd engine requires t = 2")
    if not inst.gamma.is_unweighted():
        raise EngineInapplicable("kdd engine requires an unweighted gamma")
    if d < 1:
        raise ValueError("d must be at least 1")
    if stats is None:
        stats = BranchStats()
    stats.cover_bound = 5 * inst.k
    conflicts = adjacent_conflicts(inst)
    if not conflicts:
        return Verdict.of(())
    cgraph = Graph(inst.n, conflicts.conflict_edges)
    matching = greedy_maximal_matching(cgraph)
    if len(matching) > 2 * inst.k:
        return Verdict.no()
    r = tuple(sorted({x for e in matching for x in e}))
    inside_r = [(a, b) for a, b in combinations(r, 2)
                if norm_edge(a, b) not in inst.g_edges]
    for ej in iter_subsets(inside_r, inst.k):
        committed = frozenset(norm_edge(a, b) for a, b in ej)
        ann = AnnotatedInstance(base=inst, added=committed,
                                k=inst.k - len(committed), r=r)
        below = _solve_annotated(ann, d, inst.k, stats, twin_mode)
        if below is not None:
            solution = committed | below
            if twin_mode != "delete":
                assert verify_solution(inst, solution).ok
            return Verdict.of(solution)
    return Verdict.no()
