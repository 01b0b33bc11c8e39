"""Exact-arithmetic rounding of cut-LP solutions for the weighted minimum
strongly connected spanning subgraph problem."""

from .arborescence import Arborescence, frederickson_best_root, frederickson_two_approx, min_cost_arborescence
from .decompose import ConvexCombination, decompose
from .errors import InfeasibleError, PreconditionError, SizeLimitError, WmscssError
from .exact import exact_opt
from .graph import CutCertificate, Digraph, is_strongly_connected, min_cut, read_graph
from .lp import FractionalSolution, LpOutcome, check_wmscss_feasible, min_nonzero_entry, solve_wmscss_lp
from .rounding import RoundingReport, certify_bound, expected_union_cost, round_min_pair

__version__ = "0.1.0"

__all__ = [
    "Arborescence",
    "ConvexCombination",
    "CutCertificate",
    "Digraph",
    "FractionalSolution",
    "InfeasibleError",
    "LpOutcome",
    "PreconditionError",
    "RoundingReport",
    "SizeLimitError",
    "WmscssError",
    "certify_bound",
    "check_wmscss_feasible",
    "decompose",
    "exact_opt",
    "expected_union_cost",
    "frederickson_best_root",
    "frederickson_two_approx",
    "is_strongly_connected",
    "min_cost_arborescence",
    "min_cut",
    "min_nonzero_entry",
    "read_graph",
    "round_min_pair",
    "solve_wmscss_lp",
]
