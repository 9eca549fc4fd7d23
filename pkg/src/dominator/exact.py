"""Exact (a,b)-domination and independence oracles for small graphs.

Everything here is branch-and-bound over bitmask subsets; outputs are the
ground truth that the constructive modules are checked against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import BudgetExceededError, ParameterError
from .graph import Graph

DEFAULT_NODE_LIMIT = 10 ** 8


@dataclass(frozen=True)
class DominationCertificate:
    """A vertex set together with the claim it certifies."""

    S: frozenset
    a: int
    b: int
    verified: bool
    claimed_bound: Optional[Fraction] = None
    method: str = "external"
    notes: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class GammaResult:
    status: str  # 'optimal' | 'infeasible' | 'budget-exceeded'
    size: Optional[int] = None
    witness: Optional[frozenset] = None


def is_ab_dominating(g: Graph, S, a: int, b: int) -> bool:
    """True iff every v in S has >= a neighbors in S and every v outside
    has >= b neighbors in S."""
    if a < 1 or b < 1:
        raise ParameterError("a and b must be positive")
    s_mask = 0
    for v in S:
        if not (0 <= v < g.n):
            raise ParameterError("vertex %r out of range" % (v,))
        s_mask |= 1 << v
    masks = g.neighbor_masks()
    for v in range(g.n):
        need = a if (s_mask >> v) & 1 else b
        if bin(masks[v] & s_mask).count("1") < need:
            return False
    return True


def make_certificate(g: Graph, S, a: int, b: int, method: str,
                     claimed_bound: Optional[Fraction] = None,
                     notes: Optional[dict] = None) -> DominationCertificate:
    """Issue a certificate, verifying the set and the claimed bound."""
    verified = is_ab_dominating(g, S, a, b)
    if claimed_bound is not None:
        import math
        if len(S) > math.ceil(claimed_bound * g.n):
            raise AssertionError(
                "certificate size %d exceeds claimed bound %s of n=%d"
                % (len(S), claimed_bound, g.n))
    return DominationCertificate(frozenset(S), a, b, verified,
                                 claimed_bound, method, notes or {})


def gamma_exact(g: Graph, a: int, b: int,
                node_limit: int = DEFAULT_NODE_LIMIT) -> GammaResult:
    """Minimum (a,b)-dominating set by branch-and-bound.

    Vertices are decided in index order, include before exclude, so the
    witness is the lexicographically smallest optimum. Infeasibility is a
    first-class result; hitting node_limit before proving optimality is
    reported as 'budget-exceeded'.
    """
    if a < 1 or b < 1:
        raise ParameterError("a and b must be positive")
    n = g.n
    masks = g.neighbor_masks()
    full = (1 << n) - 1
    best_size: list = [None]
    best_mask = [0]
    # S = V is valid iff every vertex has >= a neighbors (delta >= a)
    if n > 0 and all(bin(m).count("1") >= a for m in masks):
        best_size[0] = n
        best_mask[0] = full
    nodes = [0]

    def feasible(v: int, s_mask: int) -> bool:
        undecided = full & ~((1 << v) - 1)
        for u in range(n):
            have = bin(masks[u] & s_mask).count("1")
            pot = bin(masks[u] & undecided).count("1")
            if u < v:
                need = a if (s_mask >> u) & 1 else b
            else:
                need = a if a < b else b
            if have + pot < need:
                return False
        return True

    def rec(v: int, s_mask: int, size: int):
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise BudgetExceededError("node limit reached")
        if best_size[0] is not None and size >= best_size[0]:
            return
        if v == n:
            best_size[0] = size
            best_mask[0] = s_mask
            return
        inc = s_mask | (1 << v)
        if (best_size[0] is None or size + 1 < best_size[0]) \
                and feasible(v + 1, inc):
            rec(v + 1, inc, size + 1)
        if feasible(v + 1, s_mask):
            rec(v + 1, s_mask, size)

    if n == 0:
        return GammaResult("optimal", 0, frozenset())
    try:
        if feasible(0, 0):
            rec(0, 0, 0)
    except BudgetExceededError:
        return GammaResult("budget-exceeded")
    if best_size[0] is None:
        return GammaResult("infeasible")
    witness = frozenset(v for v in range(n) if (best_mask[0] >> v) & 1)
    return GammaResult("optimal", best_size[0], witness)


def independence_number_exact(g: Graph) -> tuple[int, frozenset]:
    """Maximum independent set size with a witness.

    Branch-and-bound on the highest-degree remaining vertex.
    """
    n = g.n
    masks = g.neighbor_masks()
    best = [0, 0]  # size, mask

    def rec(avail: int, size: int, chosen: int):
        if avail == 0:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + bin(avail).count("1") <= best[0]:
            return
        # highest degree within the remaining subgraph; lowest index on ties
        v = -1
        vdeg = -1
        m = avail
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(masks[u] & avail).count("1")
            if d > vdeg:
                v, vdeg = u, d
        rec(avail & ~(masks[v] | (1 << v)), size + 1, chosen | (1 << v))
        rec(avail & ~(1 << v), size, chosen)

    rec((1 << n) - 1, 0, 0)
    return best[0], frozenset(v for v in range(n) if (best[1] >> v) & 1)
