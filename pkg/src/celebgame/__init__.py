"""Exact-arithmetic engine for celebrity games.

Celebrity games are network-creation games in which every player has a
weight, links cost ``alpha`` each, and a player pays the weight of every
other player farther away than the critical distance ``beta``.
"""

__version__ = "0.1.0"

from .analysis import (
    GameClass,
    PriceReport,
    VerificationReport,
    classify,
    opt_cost,
    opt_graph,
    price_report,
    verify_theorems,
)
from .bestresponse import (
    BestResponse,
    build_reduction,
    best_response_beta1,
    best_response_exact,
    best_response_greedy,
    min_dominating_set,
)
from .equilibrium import EquilibriumSet, enumerate_ne, is_ne, run_dynamics
from .game import (
    CelebrityGame,
    StrategyProfile,
    delta_cost,
    outcome_graph,
    player_cost,
    social_cost,
    weight_component,
)
from .graph import UNREACHABLE, Graph, all_pairs_distances, bridges, diameter, is_two_edge_connected

__all__ = [
    "all_pairs_distances",
    "best_response_beta1",
    "best_response_exact",
    "best_response_greedy",
    "BestResponse",
    "bridges",
    "build_reduction",
    "CelebrityGame",
    "classify",
    "delta_cost",
    "diameter",
    "enumerate_ne",
    "EquilibriumSet",
    "GameClass",
    "Graph",
    "is_ne",
    "is_two_edge_connected",
    "min_dominating_set",
    "opt_cost",
    "opt_graph",
    "outcome_graph",
    "player_cost",
    "price_report",
    "PriceReport",
    "run_dynamics",
    "social_cost",
    "StrategyProfile",
    "UNREACHABLE",
    "VerificationReport",
    "verify_theorems",
    "weight_component",
]
