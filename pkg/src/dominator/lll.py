"""Lovasz-local-lemma color counting and Moser-Tardos resampling.

The failure probability of a vertex under a uniform random N-coloring is
evaluated in exact rational arithmetic; the minimal color count search
yields the (N-1)/N upper bound on the domination fraction, and the
resampler turns a feasible parameter row into an actual good coloring.
"""
from __future__ import annotations

import decimal
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import BudgetExceededError, ParameterError
from .exact import DominationCertificate, make_certificate
from .graph import Graph

# Fixed rational upper bound on e, so that a passing condition is always
# conservative.
E_UPPER = Fraction(2718281828459045236, 10 ** 18)

# The (delta, Delta, a, b) parameter rows of the published comparison table.
TABLE1_ROWS = [
    (7, 7, 2, 2), (7, 8, 2, 2),
    (9, 9, 2, 2), (9, 10, 2, 2), (9, 11, 2, 2),
    (14, 14, 2, 2),
    (8, 8, 1, 2), (8, 9, 1, 2), (8, 10, 1, 2), (8, 11, 1, 2),
    (13, 13, 1, 2), (13, 14, 1, 2),
    (8, 8, 2, 1), (13, 13, 2, 1), (13, 14, 2, 1),
]


@dataclass(frozen=True)
class LllParams:
    delta: int
    Delta: int
    a: int
    b: int

    def __post_init__(self):
        if self.delta < 1 or self.Delta < self.delta:
            raise ParameterError("need 1 <= delta <= Delta")
        if self.a < 1 or self.b < 1:
            raise ParameterError("a and b must be positive")


@dataclass(frozen=True)
class LllReport:
    params: LllParams
    minimal_N: Optional[int]
    P_at_N: Optional[Fraction]
    bound: Optional[Fraction]  # (N-1)/N when minimal_N is present
    condition_value: Optional[Fraction]


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    N: int

    def __post_init__(self):
        if any(not 0 <= c < self.N for c in self.colors):
            raise ParameterError("color index out of range")


def _tail_sum(delta: int, N: int, upto: int) -> int:
    """Sum_{j=0}^{upto-1} C(delta, j) * (N-1)^j."""
    return sum(math.comb(delta, j) * (N - 1) ** j for j in range(upto))


def failure_prob(delta: int, N: int, a: int, b: int) -> Fraction:
    """Probability that a fixed vertex is bad under a uniform N-coloring,
    union over every choice of removed color (exact rational)."""
    if not (1 <= a <= delta and 1 <= b <= delta):
        raise ParameterError("need 1 <= a, b <= delta")
    if N < 2:
        raise ParameterError("need N >= 2")
    num = _tail_sum(delta, N, b) + (N - 1) * _tail_sum(delta, N, a)
    # the two-term sum is a union bound, so clamp it to a probability
    return min(Fraction(num, N ** delta), Fraction(1))


def failure_prob_fixed_color(delta: int, N: int, a: int, b: int) -> Fraction:
    """Debug variant: the event probability if the removed color were fixed
    in advance (the union factor N divided out)."""
    return failure_prob(delta, N, a, b) / N


def lll_condition(P: Fraction, Delta: int) -> tuple[bool, Fraction]:
    """The symmetric local-lemma test e * P * Delta^2 <= 1, with e rounded
    up so a pass is conservative."""
    if not 0 <= P <= 1:
        raise ParameterError("P must be a probability")
    if Delta < 1:
        raise ParameterError("Delta must be positive")
    value = E_UPPER * P * Delta * Delta
    return value <= 1, value


def minimal_colors(params: LllParams, N_max: int = 64) -> LllReport:
    """Smallest N in [2, N_max] whose failure probability passes the
    local-lemma condition; absence is encoded, not raised."""
    if N_max < 2:
        raise ParameterError("N_max must be at least 2")
    if params.a > params.delta or params.b > params.delta:
        return LllReport(params, None, None, None, None)
    for N in range(2, N_max + 1):
        P = failure_prob(params.delta, N, params.a, params.b)
        holds, value = lll_condition(P, params.Delta)
        if holds:
            return LllReport(params, N, P, Fraction(N - 1, N), value)
    return LllReport(params, None, None, None, None)


def smallest_regular_degree(a: int, b: int, N: int,
                            r_max: int = 1000) -> Optional[int]:
    """Smallest r such that an r-regular graph passes the condition with N
    colors; the finite stand-in for the asymptotic threshold claim."""
    for r in range(max(a, b, 1), r_max + 1):
        if lll_condition(failure_prob(r, N, a, b), r)[0]:
            return r
    return None


def is_good_at(g: Graph, c: Coloring, v: int, a: int, b: int) -> bool:
    """Goodness of vertex v: (i) at least b neighbors colored differently
    from v, and (ii) for every other color x, at least a neighbors colored
    differently from x."""
    counts = [0] * c.N
    for u in g.neighbors(v):
        counts[c.colors[u]] += 1
    d = g.degree(v)
    if d - counts[c.colors[v]] < b:
        return False
    for x in range(c.N):
        if x != c.colors[v] and d - counts[x] < a:
            return False
    return True


def all_good(g: Graph, c: Coloring, a: int, b: int) -> bool:
    return all(is_good_at(g, c, v, a, b) for v in range(g.n))


@dataclass(frozen=True)
class ResampleRun:
    coloring: Coloring
    resamples: int


def moser_tardos(g: Graph, N: int, a: int, b: int, seed: int,
                 max_resamples: Optional[int] = None) -> ResampleRun:
    """Resample the closed neighborhood of the lowest-index bad vertex
    until the coloring is good everywhere.

    Raises BudgetExceededError (detail = number of still-bad vertices)
    when max_resamples is hit; defaults to 50 * n resamples.
    """
    if N < 2:
        raise ParameterError("need N >= 2")
    if max_resamples is None:
        max_resamples = 50 * g.n
    rng = random.Random(seed)
    colors = [rng.randrange(N) for _ in range(g.n)]
    resamples = 0
    while True:
        coloring = Coloring(tuple(colors), N)
        bad = next((v for v in range(g.n)
                    if not is_good_at(g, coloring, v, a, b)), None)
        if bad is None:
            return ResampleRun(coloring, resamples)
        if resamples >= max_resamples:
            still_bad = sum(1 for v in range(g.n)
                            if not is_good_at(g, coloring, v, a, b))
            raise BudgetExceededError(
                "resample budget %d exhausted" % max_resamples,
                detail=still_bad)
        for u in (bad,) + g.neighbors(bad):
            colors[u] = rng.randrange(N)
        resamples += 1


def extract_dominating(g: Graph, c: Coloring, a: int,
                       b: int) -> DominationCertificate:
    """Drop a largest color class (smallest index on ties) and certify the
    rest as an (a,b)-dominating set."""
    if not all_good(g, c, a, b):
        raise ParameterError("coloring is not good at every vertex")
    sizes = [0] * c.N
    for col in c.colors:
        sizes[col] += 1
    removed = max(range(c.N), key=lambda x: (sizes[x], -x))
    S = frozenset(v for v in range(g.n) if c.colors[v] != removed)
    # pigeonhole: the largest class has >= ceil(n/N) vertices
    claimed = Fraction(c.N - 1, c.N)
    cert = make_certificate(g, S, a, b, "lll", claimed,
                            {"N": c.N, "removed_color": removed})
    if not cert.verified:
        raise AssertionError(
            "extraction from a good coloring failed verification")
    assert len(S) <= g.n - math.ceil(g.n / c.N)
    return cert


def report_rows(rows, N_max: int = 64) -> list[LllReport]:
    return [minimal_colors(LllParams(*row), N_max) for row in rows]


def _decimal20(x: Fraction) -> str:
    with decimal.localcontext() as ctx:
        ctx.prec = 20
        return str(decimal.Decimal(x.numerator) / decimal.Decimal(
            x.denominator))


def report_to_record(r: LllReport) -> dict:
    """Flat record used by both the TSV and JSON table emitters."""
    return {
        "delta": r.params.delta,
        "Delta": r.params.Delta,
        "a": r.params.a,
        "b": r.params.b,
        "minimal_N": r.minimal_N,
        "bound_num": r.bound.numerator if r.bound is not None else None,
        "bound_den": r.bound.denominator if r.bound is not None else None,
        "P_num": r.P_at_N.numerator if r.P_at_N is not None else None,
        "P_den": r.P_at_N.denominator if r.P_at_N is not None else None,
        "condition_value_decimal":
            _decimal20(r.condition_value)
            if r.condition_value is not None else None,
    }
