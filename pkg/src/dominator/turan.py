"""Constructive upper bounds via an auxiliary graph and a greedy
independent set.

Each strategy attaches a small gadget (triangle, matching, clique, ...) to
the neighborhood of every vertex. Independent sets of the resulting
auxiliary graph have (a,b)-dominating complements in the base graph, and
the greedy extraction realizes the Turan-type size guarantee.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DominatorError, ParameterError
from .exact import DominationCertificate, independence_number_exact, \
    make_certificate
from .graph import Graph


@dataclass(frozen=True)
class Strategy:
    """Which gadget to attach per vertex, and how neighbors are chosen."""

    kind: str  # tt22_min3 | tt22_min4 | kk_clique | kk_matching |
               # kk_partition | tt22_mixed | ab_general | ab_spanning
    k: Optional[int] = None
    d: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    chooser: str = "lowest_index"  # or 'seeded_random'
    seed: Optional[int] = None
    spanning_subgraph: Optional[Graph] = None


@dataclass(frozen=True)
class AuxGraph:
    base_n: int
    aux_edges: frozenset
    gadget_log: dict = field(compare=False, default_factory=dict)
    alpha: Fraction = Fraction(0)
    a: int = 1
    b: int = 1


def _norm(u, v):
    return (u, v) if u < v else (v, u)


def _balanced_part_sizes(m: int, parts: int) -> list[int]:
    base, extra = divmod(m, parts)
    return [base + 1] * extra + [base] * (parts - extra)


def partition_budget(k: int, d: int) -> int:
    """Exact per-vertex gadget edge count for the partition strategy:
    within-part edges of a balanced split of k+1+d vertices into d+1
    parts."""
    return sum(s * (s - 1) // 2 for s in _balanced_part_sizes(k + 1 + d,
                                                              d + 1))


def partition_budget_formula(k: int, d: int) -> Fraction:
    """The continuous Turan estimate of the per-vertex count; equals the
    exact count only when d+1 divides k+1+d."""
    return Fraction(k * (k + d + 1), 2 * (d + 1))


def partition_printed_bound(k: int, d: int) -> Fraction:
    """The closed-form fraction printed alongside the partition theorem;
    reported for comparison, never certified against."""
    t = 2 * d + (k - d) * (k - d + 1)
    return Fraction(t, t + 1)


def strategy_params(s: Strategy) -> tuple[int, int, Fraction]:
    """(a, b, per-vertex budget alpha) for a strategy."""
    if s.kind == "tt22_min3":
        return 2, 2, Fraction(3)
    if s.kind == "tt22_min4":
        return 2, 2, Fraction(2)
    if s.kind == "tt22_mixed":
        return 2, 2, Fraction(5, 2)
    if s.kind == "kk_clique":
        k = _require_k(s)
        return k, k, Fraction(k * (k + 1), 2)
    if s.kind == "kk_matching":
        k = _require_k(s)
        return k, k, Fraction(k)
    if s.kind == "kk_partition":
        k = _require_k(s)
        if s.d is None or not 0 <= s.d <= k - 1:
            raise ParameterError("kk_partition needs 0 <= d <= k-1")
        return k, k, Fraction(partition_budget(k, s.d))
    if s.kind == "ab_general":
        a, b = _require_ab(s)
        return a, b, Fraction(b)
    if s.kind == "ab_spanning":
        a, b = _require_ab(s)
        return a, b, Fraction(a + b, 2)
    raise ParameterError("unknown strategy kind %r" % s.kind)


def _require_k(s: Strategy) -> int:
    if s.k is None or s.k < 1:
        raise ParameterError("strategy %s needs k >= 1" % s.kind)
    return s.k


def _require_ab(s: Strategy) -> tuple[int, int]:
    if s.a is None or s.b is None or not 1 <= s.a < s.b:
        raise ParameterError("strategy %s needs 1 <= a < b" % s.kind)
    return s.a, s.b


def _min_degree_needed(s: Strategy) -> int:
    if s.kind == "tt22_min3" or s.kind == "tt22_mixed":
        return 3
    if s.kind == "tt22_min4":
        return 4
    if s.kind == "kk_clique":
        return s.k + 1
    if s.kind == "kk_matching":
        return 2 * s.k
    if s.kind == "kk_partition":
        return s.k + 1 + s.d
    return s.a + s.b  # ab_general / ab_spanning


def _disjoint_pairs(chosen: list[int]) -> list[tuple[int, int]]:
    it = iter(chosen)
    return [_norm(u, v) for u, v in zip(it, it)]


def build_aux(g: Graph, s: Strategy) -> AuxGraph:
    """Attach the strategy's gadget to every vertex of g."""
    a, b, alpha = strategy_params(s)
    need = _min_degree_needed(s)
    for v in range(g.n):
        if g.degree(v) < need:
            raise ParameterError(
                "vertex %d has degree %d < %d required by %s"
                % (v, g.degree(v), need, s.kind))
    if s.kind == "tt22_mixed":
        high = sum(1 for v in range(g.n) if g.degree(v) >= 4)
        if high < math.ceil(g.n / 2):
            raise ParameterError(
                "tt22_mixed needs at least half of the vertices to have "
                "degree >= 4 (have %d of %d)" % (high, g.n))

    rng = random.Random(s.seed) if s.chooser == "seeded_random" else None
    if rng is None and s.chooser != "lowest_index":
        raise ParameterError("unknown chooser %r" % s.chooser)

    partners = None
    if s.kind == "ab_spanning":
        partners = _spanning_partners(g, s, b - a)

    def choose(pool: list[int], m: int) -> list[int]:
        if rng is not None:
            return rng.sample(pool, m)
        return pool[:m]

    aux_edges = set()
    log: dict[int, list] = {}
    for v in range(g.n):
        nbrs = list(g.neighbors(v))
        gadget: list[tuple[int, int]] = []
        if s.kind in ("tt22_min3", "kk_clique"):
            m = 3 if s.kind == "tt22_min3" else s.k + 1
            chosen = choose(nbrs, m)
            gadget = [_norm(x, y) for i, x in enumerate(chosen)
                      for y in chosen[i + 1:]]
        elif s.kind in ("tt22_min4", "kk_matching"):
            m = 4 if s.kind == "tt22_min4" else 2 * s.k
            gadget = _disjoint_pairs(choose(nbrs, m))
        elif s.kind == "kk_partition":
            chosen = choose(nbrs, s.k + 1 + s.d)
            pos = 0
            for size in _balanced_part_sizes(len(chosen), s.d + 1):
                part = chosen[pos:pos + size]
                pos += size
                gadget += [_norm(x, y) for i, x in enumerate(part)
                           for y in part[i + 1:]]
        elif s.kind == "tt22_mixed":
            if g.degree(v) == 3:
                chosen = list(nbrs)
                gadget = [_norm(x, y) for i, x in enumerate(chosen)
                          for y in chosen[i + 1:]]
            else:
                gadget = _disjoint_pairs(choose(nbrs, 4))
        elif s.kind == "ab_general":
            chosen = choose(nbrs, 2 * a)
            gadget = _disjoint_pairs(chosen)
            taken = set(chosen)
            far = [u for u in nbrs if u not in taken][:b - a]
            if len(far) < b - a:
                raise DominatorError(
                    "cannot find %d incident edges at vertex %d avoiding "
                    "the paired neighbors" % (b - a, v))
            gadget += [_norm(v, u) for u in far]
        elif s.kind == "ab_spanning":
            avoid = partners[v]
            pool = [u for u in nbrs if u not in avoid]
            if len(pool) < 2 * a:
                raise ParameterError(
                    "vertex %d has too few neighbors outside its spanning-"
                    "subgraph partners" % v)
            gadget = _disjoint_pairs(choose(pool, 2 * a))
            # one log entry per subgraph edge, attributed to its lower
            # endpoint, so the multiplicity budget matches (a+b)/2 per vertex
            gadget += [_norm(v, u) for u in avoid if v < u]
        log[v] = gadget
        aux_edges.update(gadget)

    total = sum(len(gd) for gd in log.values())
    assert total <= alpha * g.n, \
        "gadget budget violated: %d > %s * %d" % (total, alpha, g.n)
    return AuxGraph(g.n, frozenset(aux_edges), log, alpha, a, b)


def _spanning_partners(g: Graph, s: Strategy, reg: int) -> list[set]:
    sub = s.spanning_subgraph
    if sub is None:
        if reg == 1:
            status, matching = find_perfect_matching(g, seed=s.seed or 0)
            if status != "found":
                raise ParameterError(
                    "ab_spanning with b-a=1 needs a perfect matching; "
                    "search result: %s" % status)
            sub = Graph.from_edges(g.n, matching)
        else:
            raise ParameterError(
                "ab_spanning needs a user-supplied %d-regular spanning "
                "subgraph" % reg)
    if sub.n != g.n or not sub.edges <= g.edges:
        raise ParameterError("spanning subgraph is not a subgraph of g")
    for v in range(g.n):
        if sub.degree(v) != reg:
            raise ParameterError(
                "spanning subgraph is not %d-regular at vertex %d"
                % (reg, v))
    return [set(sub.neighbors(v)) for v in range(g.n)]


def greedy_independent_set(h: AuxGraph) -> frozenset:
    """Caro-Wei greedy: repeatedly take a minimum-degree vertex and delete
    its closed neighborhood; ties go to the lowest index."""
    adj = {v: set() for v in range(h.base_n)}
    for u, v in h.aux_edges:
        adj[u].add(v)
        adj[v].add(u)
    alive = set(range(h.base_n))
    chosen = set()
    while alive:
        v = min(alive, key=lambda u: (len(adj[u] & alive), u))
        chosen.add(v)
        dead = (adj[v] & alive) | {v}
        alive -= dead
    return frozenset(chosen)


def greedy_guarantee(h: AuxGraph) -> int:
    """Size the greedy extraction is guaranteed to reach from the simple
    aux edge count: ceil(n / (2*|E'|/n + 1))."""
    n = h.base_n
    if n == 0:
        return 0
    return math.ceil(Fraction(n * n, 2 * len(h.aux_edges) + n))


def turan_dominating_set(g: Graph, s: Strategy,
                         use_exact: bool = False) -> DominationCertificate:
    """Full pipeline: aux graph, independent set, certified complement."""
    h = build_aux(g, s)
    if use_exact:
        _, indep = independence_number_exact(
            Graph.from_edges(h.base_n, h.aux_edges))
    else:
        indep = greedy_independent_set(h)
    S = frozenset(range(g.n)) - indep
    alpha = h.alpha
    claimed = Fraction(2 * alpha, 2 * alpha + 1)
    guaranteed = g.n - math.ceil(Fraction(g.n, 2 * alpha + 1))
    if len(S) > guaranteed:
        raise AssertionError("certificate size %d exceeds guaranteed %d"
                             % (len(S), guaranteed))
    notes = {"strategy": s.kind, "alpha": alpha,
             "aux_edges": len(h.aux_edges)}
    if s.kind == "kk_partition":
        notes["budget_formula"] = partition_budget_formula(s.k, s.d)
        notes["printed_theorem_bound"] = partition_printed_bound(s.k, s.d)
    cert = make_certificate(g, S, h.a, h.b, "turan", claimed, notes)
    if not cert.verified:
        raise AssertionError(
            "turan certificate failed verification (implementation bug)")
    return cert


def find_perfect_matching(g: Graph, seed: int = 0,
                          restarts: int = 200):
    """Perfect matching search.

    Bipartite graphs get an exact augmenting-path answer ('found' or
    'nonexistent'). Otherwise a randomized greedy with length-3 alternating
    improvements runs up to ``restarts`` times and a miss is the
    inconclusive 'not-found'.
    """
    if g.n % 2 == 1:
        return ("nonexistent", None)
    if g.n == 0:
        return ("found", frozenset())
    parts = g.bipartition()
    if parts is not None:
        return _bipartite_pm(g, parts)
    return _randomized_pm(g, seed, restarts)


def _bipartite_pm(g: Graph, parts):
    left = sorted(parts[0])
    mate = [-1] * g.n

    def try_augment(u, seen):
        for w in g.neighbors(u):
            if w in seen:
                continue
            seen.add(w)
            if mate[w] == -1 or try_augment(mate[w], seen):
                mate[w] = u
                mate[u] = w
                return True
        return False

    size = 0
    for u in left:
        if mate[u] == -1 and try_augment(u, set()):
            size += 1
    if 2 * size != g.n:
        return ("nonexistent", None)
    return ("found", frozenset(_norm(v, mate[v]) for v in range(g.n)
                               if v < mate[v]))


def _randomized_pm(g: Graph, seed: int, restarts: int):
    rng = random.Random(seed)
    edges = sorted(g.edges)
    for _ in range(restarts):
        rng.shuffle(edges)
        mate = [-1] * g.n
        for u, v in edges:
            if mate[u] == -1 and mate[v] == -1:
                mate[u], mate[v] = v, u
        improved = True
        while improved:
            improved = False
            for u in range(g.n):
                if mate[u] != -1:
                    continue
                for x in g.neighbors(u):
                    y = mate[x]
                    if y == -1:
                        mate[u], mate[x] = x, u
                        improved = True
                        break
                    hit = next((w for w in g.neighbors(y)
                                if w != u and mate[w] == -1), None)
                    if hit is not None:
                        mate[u], mate[x] = x, u
                        mate[y], mate[hit] = hit, y
                        improved = True
                        break
                if improved:
                    break
        if all(m != -1 for m in mate):
            return ("found", frozenset(_norm(v, mate[v])
                                       for v in range(g.n) if v < mate[v]))
    return ("not-found", None)
