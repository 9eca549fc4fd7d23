"""Computation, construction and certification of (a,b)-dominating sets."""

from .graph import (Graph, DegreeProfile, degree_profile, generate,
                    parse_edge_list, write_edge_list)
from .graph6 import parse_graph6, write_graph6
from .exact import (DominationCertificate, GammaResult, gamma_exact,
                    independence_number_exact, is_ab_dominating)
from .turan import (AuxGraph, Strategy, build_aux, find_perfect_matching,
                    greedy_independent_set, turan_dominating_set)
from .lll import (Coloring, LllParams, LllReport, extract_dominating,
                  failure_prob, is_good_at, lll_condition, minimal_colors,
                  moser_tardos)
from .bounds import BoundReport, bound_chang, bound_fixed, bound_kaz, \
    compare_all

__all__ = [name for name in dir() if not name.startswith("_")]
