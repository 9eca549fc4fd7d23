"""Simple undirected graphs: representation, parsing, generators, degrees.

Vertices are dense 0-based integers; edges are unordered pairs stored as
sorted tuples. Graphs are immutable after construction and safe to share.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import FormatError, GenerationError, ParameterError


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertex set {0..n-1}.

    ``tags`` records provenance hints set by the generators (for example
    that a graph is the incidence graph of a projective plane); they never
    affect equality.
    """

    n: int
    edges: frozenset
    tags: frozenset = field(default_factory=frozenset, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("vertex count must be non-negative")
        adj = [[] for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if u == v:
                raise FormatError("self-loop at vertex %d" % u)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise FormatError("endpoint out of range in edge %r" % (e,))
            if u > v:
                raise FormatError("edge %r not normalized" % (e,))
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   tags: Iterable[str] = ()) -> "Graph":
        return cls(n, frozenset(_norm(u, v) for u, v in edges),
                   frozenset(tags))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def neighbor_masks(self) -> list[int]:
        """Adjacency as bitmasks, for the subset-search based solvers."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def bipartition(self) -> Optional[tuple[set, set]]:
        """Two-coloring by BFS, or None if an odd cycle exists."""
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            queue = [s]
            while queue:
                u = queue.pop()
                for w in self._adj[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        return ({v for v in range((self.n)) if color[v] == 0},
                {v for v in range(self.n) if color[v] == 1})

    def girth(self) -> Optional[int]:
        """Length of a shortest cycle, or None for a forest."""
        best = None
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = [s]
            head = 0
            while head < len(queue):
                u = queue[head]
                head += 1
                for w in self._adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        cyc = dist[u] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
        return best


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    degree_sequence: tuple[int, ...]
    is_regular: bool
    regular_degree: Optional[int]


def degree_profile(g: Graph) -> DegreeProfile:
    """Degree statistics of a non-empty graph."""
    if g.n == 0:
        raise ParameterError("degree profile of the empty graph is undefined")
    seq = tuple(g.degree(v) for v in range(g.n))
    dmin, dmax = min(seq), max(seq)
    regular = dmin == dmax
    return DegreeProfile(dmin, dmax, seq, regular, dmin if regular else None)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    The first non-comment line holds the vertex count; every further
    non-comment line holds one edge "u v". Lines starting with '#' and
    blank lines are ignored.
    """
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise FormatError("expected vertex count, got %r" % line,
                                  line=lineno)
            if n < 0:
                raise FormatError("negative vertex count", line=lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("expected 'u v', got %r" % line, line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError("non-integer endpoint in %r" % line,
                              line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError("endpoint out of range in %r" % line,
                              line=lineno)
        if u == v:
            raise FormatError("self-loop %d %d" % (u, v), line=lineno)
        e = _norm(u, v)
        if e in edges:
            raise FormatError("duplicate edge %d %d" % (u, v), line=lineno)
        edges.add(e)
    if n is None:
        raise FormatError("empty input: no vertex count line")
    return Graph(n, frozenset(edges))


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend("%d %d" % e for e in sorted(g.edges))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generators

# LCF notation [5,-5]^7: a 14-cycle plus a chord i -- i+5 for each even i.
_HEAWOOD_CHORD = 5

CONFIG_MODEL_RESTART_CAP = 10_000


def _heawood() -> Graph:
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + _HEAWOOD_CHORD) % 14) for i in range(0, 14, 2)]
    return Graph.from_edges(14, edges,
                            tags=("heawood", "projective_incidence", "q=2"))


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges, tags=("petersen", "moore"))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _complete_bipartite(s: int, t: int) -> Graph:
    return Graph.from_edges(
        s + t, [(i, s + j) for i in range(s) for j in range(t)])


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _projective_incidence(q: int) -> Graph:
    """Incidence graph of PG(2, q) over the prime field Z_q.

    Points and lines are both the normalized nonzero triples (first nonzero
    coordinate 1); a point lies on a line iff their dot product is 0 mod q.
    """
    if not _is_prime(q):
        raise ParameterError("projective plane order q=%d is not prime" % q)
    reps = []
    for x in range(q):
        for y in range(q):
            for z in range(q):
                if (x, y, z) == (0, 0, 0):
                    continue
                # normalized: first nonzero coordinate equals 1
                lead = x if x else (y if y else z)
                if lead == 1:
                    reps.append((x, y, z))
    m = q * q + q + 1
    assert len(reps) == m
    edges = []
    for i, p in enumerate(reps):
        for j, l in enumerate(reps):
            if sum(pc * lc for pc, lc in zip(p, l)) % q == 0:
                edges.append((i, m + j))
    return Graph.from_edges(2 * m, edges,
                            tags=("projective_incidence", "q=%d" % q))


def _random_regular(n: int, r: int, seed: int,
                    restart_cap: int = CONFIG_MODEL_RESTART_CAP) -> Graph:
    """Random r-regular simple graph via the configuration model.

    Stubs are shuffled and paired; clashing stubs are re-paired within the
    attempt, and an attempt that gets stuck triggers a whole restart.
    Deterministic given the seed.
    """
    if r >= n or (n * r) % 2 != 0:
        raise GenerationError("no simple %d-regular graph on %d vertices"
                              % (r, n))
    if r == 0:
        return Graph.from_edges(n, [])
    rng = random.Random(seed)

    def attempt():
        edges = set()
        stubs = [v for v in range(n) for _ in range(r)]
        while stubs:
            rng.shuffle(stubs)
            leftover = {}
            it = iter(stubs)
            for u, v in zip(it, it):
                e = _norm(u, v)
                if u != v and e not in edges:
                    edges.add(e)
                else:
                    leftover[u] = leftover.get(u, 0) + 1
                    leftover[v] = leftover.get(v, 0) + 1
            if leftover:
                # stuck if no pair of leftover stubs can still form a new edge
                keys = sorted(leftover)
                ok = any(u != v and _norm(u, v) not in edges
                         for i, u in enumerate(keys) for v in keys[i:])
                if not ok:
                    return None
            stubs = [v for v, c in leftover.items() for _ in range(c)]
        return edges

    for _ in range(restart_cap):
        edges = attempt()
        if edges is not None:
            return Graph.from_edges(n, edges)
    raise GenerationError(
        "configuration model exceeded the restart cap (%d)" % restart_cap)


def generate(kind: str, seed: Optional[int] = None, **params) -> Graph:
    """Build one of the named graph families.

    Kinds: heawood, petersen, cycle(n), complete(n),
    complete_bipartite(s, t), projective_incidence(q prime),
    random_regular(n, r; seed required).
    """
    if kind == "heawood":
        return _heawood()
    if kind == "petersen":
        return _petersen()
    if kind == "cycle":
        return _cycle(params["n"])
    if kind == "complete":
        return _complete(params["n"])
    if kind == "complete_bipartite":
        return _complete_bipartite(params["s"], params["t"])
    if kind == "projective_incidence":
        return _projective_incidence(params["q"])
    if kind == "random_regular":
        if seed is None:
            raise ParameterError("random_regular requires a seed")
        cap = params.get("restart_cap", CONFIG_MODEL_RESTART_CAP)
        return _random_regular(params["n"], params["r"], seed, cap)
    raise ParameterError("unknown graph kind %r" % kind)
