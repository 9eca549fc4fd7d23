"""Closed-form comparator bounds and the side-by-side comparison table."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ParameterError
from . import exact, lll, turan
from .graph import Graph, DegreeProfile, degree_profile


@dataclass(frozen=True)
class BoundReport:
    method: str
    applicable: bool
    value: Optional[object] = None  # Fraction, float or int bound on gamma
    reason: str = ""
    parameters: dict = field(default_factory=dict, compare=False)
    vacuous: bool = False


def _mean_binomial(g: Graph, m: int, shift: int) -> Fraction:
    """(1/n) * sum_i C(d(v_i) + shift, m), exact."""
    return Fraction(sum(math.comb(g.degree(v) + shift, m)
                        for v in range(g.n)), g.n)


def bound_chang(g: Graph, k: int) -> BoundReport:
    """Greedy-style bound on gamma_{k-1,k} using the mean of
    C(d(v)+1, k-1)."""
    prof = degree_profile(g)
    delta = prof.min_degree
    if not 1 <= k <= delta + 1:
        raise ParameterError("need 1 <= k <= delta+1")
    dk = _mean_binomial(g, k - 1, shift=1)
    assert dk >= 1, "mean binomial below 1 cannot occur for k-1 <= delta"
    value = g.n * (math.log(delta - k + 2) + math.log(dk) + 1) \
        / (delta - k + 2)
    return BoundReport("chang", True, value,
                       parameters={"k": k, "d_tilde": dk,
                                   "bounds": "gamma_{%d,%d}" % (k - 1, k)},
                       vacuous=value > g.n)


def bound_kaz(g: Graph, k: int) -> BoundReport:
    """Bound on gamma_{k,k} using the mean of C(d(v), k)."""
    prof = degree_profile(g)
    delta = prof.min_degree
    if not 1 <= k < delta:
        raise ParameterError("need delta > k >= 1")
    dk = _mean_binomial(g, k, shift=0)
    value = g.n * (math.log(delta - k) + math.log(dk) + 1) / (delta - k)
    return BoundReport("kaz", True, value,
                       parameters={"k": k, "d_hat": dk,
                                   "bounds": "gamma_{%d,%d}" % (k, k)},
                       vacuous=value > g.n)


def bound_fixed(profile: DegreeProfile, n: int, which: str) -> BoundReport:
    """Fixed-family comparators; applicability caveats are recorded as
    reasons, never decided here."""
    if which == "henning_yeo":
        if profile.min_degree < 3:
            return BoundReport("henning_yeo", False,
                               reason="requires delta >= 3")
        return BoundReport(
            "henning_yeo", True, Fraction(11 * n, 13),
            reason="excludes the 14-vertex exceptional graph",
            parameters={"bounds": "gamma_{2,2}"})
    if which == "ali_projective":
        r = profile.regular_degree
        if r is None or r < 3:
            return BoundReport("ali_projective", False,
                               reason="requires r-regular with r >= 3")
        return BoundReport(
            "ali_projective", True,
            Fraction((r * (r - 1) - 1) * n, r * (r - 1)),
            reason="general case; equality value applies when G is the "
                   "incidence graph of a projective plane of order r-1",
            parameters={"bounds": "gamma_{%d,%d}" % (r - 1, r - 1),
                        "equality_value": 2 * r * (r - 1)})
    if which == "ali_moore":
        r = profile.regular_degree
        if r is None:
            return BoundReport("ali_moore", False,
                               reason="requires an r-regular graph")
        return BoundReport(
            "ali_moore", True, Fraction((r * r - 1) * n, r * r),
            reason="general case; equality value applies when G is a "
                   "Moore graph of degree r and diameter 2",
            parameters={"bounds": "gamma_{%d,%d}" % (r - 1, r),
                        "equality_value": r * r})
    raise ParameterError("unknown fixed bound %r" % which)


def _turan_strategies(g: Graph, a: int, b: int) -> list[turan.Strategy]:
    prof = degree_profile(g)
    delta = prof.min_degree
    out = []
    if a == b:
        k = a
        if a == 2:
            if delta >= 3:
                out.append(turan.Strategy("tt22_min3"))
            if delta >= 4:
                out.append(turan.Strategy("tt22_min4"))
            high = sum(1 for v in range(g.n) if g.degree(v) >= 4)
            if delta >= 3 and high >= math.ceil(g.n / 2):
                out.append(turan.Strategy("tt22_mixed"))
        if delta >= k + 1:
            out.append(turan.Strategy("kk_clique", k=k))
        if delta >= 2 * k:
            out.append(turan.Strategy("kk_matching", k=k))
        d = min(k - 1, delta - k - 1)
        if 1 <= d:
            out.append(turan.Strategy("kk_partition", k=k, d=d))
    elif a < b and delta >= a + b:
        out.append(turan.Strategy("ab_general", a=a, b=b))
        if b - a == 1:
            status, _ = turan.find_perfect_matching(g)
            if status == "found":
                out.append(turan.Strategy("ab_spanning", a=a, b=b))
    return out


def compare_all(g: Graph, a: int, b: int,
                node_limit: int = exact.DEFAULT_NODE_LIMIT,
                exact_max_n: int = 30) -> list[BoundReport]:
    """Every applicable bound on gamma_{a,b}(g), ascending by value;
    inapplicable methods trail with their reasons."""
    prof = degree_profile(g)
    reports = []

    if g.n <= exact_max_n:
        res = exact.gamma_exact(g, a, b, node_limit)
        if res.status == "optimal":
            reports.append(BoundReport("exact", True, res.size,
                                       parameters={"witness":
                                                   sorted(res.witness)}))
        else:
            reports.append(BoundReport("exact", False, reason=res.status))
    else:
        reports.append(BoundReport("exact", False,
                                   reason="n > %d" % exact_max_n))

    for strat in _turan_strategies(g, a, b):
        try:
            cert = turan.turan_dominating_set(g, strat)
            reports.append(BoundReport(
                "turan", True, len(cert.S),
                parameters={"strategy": strat.kind,
                            "claimed_bound": cert.claimed_bound}))
        except ParameterError as err:
            reports.append(BoundReport("turan", False, reason=str(err),
                                       parameters={"strategy": strat.kind}))

    if a <= prof.min_degree and b <= prof.min_degree:
        rep = lll.minimal_colors(lll.LllParams(prof.min_degree,
                                               prof.max_degree, a, b))
        if rep.minimal_N is not None:
            reports.append(BoundReport(
                "lll", True, rep.bound * g.n,
                parameters={"N": rep.minimal_N, "bound": rep.bound},
                vacuous=False))
        else:
            reports.append(BoundReport(
                "lll", False, reason="no color count up to 64 passes the "
                                     "local-lemma condition"))
    else:
        reports.append(BoundReport("lll", False,
                                   reason="a or b exceeds delta"))

    if b == a + 1 and 1 <= b <= prof.min_degree + 1:
        reports.append(bound_chang(g, b))
    if a == b and 1 <= a < prof.min_degree:
        reports.append(bound_kaz(g, a))
    if a == b == 2:
        rep = bound_fixed(prof, g.n, "henning_yeo")
        if "heawood" in g.tags:
            rep = BoundReport("henning_yeo", False,
                              reason="G is the excluded 14-vertex graph")
        reports.append(rep)
    if a == b and prof.is_regular and prof.regular_degree == a + 1:
        rep = bound_fixed(prof, g.n, "ali_projective")
        if rep.applicable and "projective_incidence" in g.tags:
            rep = BoundReport("ali_projective", True,
                              rep.parameters["equality_value"],
                              reason="incidence-graph equality case",
                              parameters=rep.parameters)
        reports.append(rep)
    if b == a + 1 and prof.is_regular and prof.regular_degree == b:
        rep = bound_fixed(prof, g.n, "ali_moore")
        if rep.applicable and "moore" in g.tags:
            rep = BoundReport("ali_moore", True,
                              rep.parameters["equality_value"],
                              reason="Moore-graph equality case",
                              parameters=rep.parameters)
        reports.append(rep)

    def key(r: BoundReport):
        return (0, float(r.value)) if r.applicable else (1, 0.0)

    return sorted(reports, key=key)
