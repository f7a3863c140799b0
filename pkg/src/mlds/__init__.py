"""Minimum liar's dominating sets on unit disk graphs."""

from .approx import approx_lds, greedy_mis, mis_layers
from .domination import check_lds, check_lds_of, is_lds, lds_feasible
from .errors import MldsError
from .exact import exact_mlds, exact_mlds_restricted, milp_mlds
from .geometry import Point, UnitDiskGraph, build_udg, parse_points, read_points
from .prior_art import bb_solve, build_counterexample, gen_counterexample
from .ptas import PtasConfig, ptas_lds
from .reduction import build_reduction, check_correspondence, load_corpus

__all__ = [
    "MldsError",
    "Point",
    "PtasConfig",
    "UnitDiskGraph",
    "approx_lds",
    "bb_solve",
    "build_counterexample",
    "build_reduction",
    "build_udg",
    "check_correspondence",
    "check_lds",
    "check_lds_of",
    "exact_mlds",
    "exact_mlds_restricted",
    "gen_counterexample",
    "greedy_mis",
    "is_lds",
    "lds_feasible",
    "load_corpus",
    "milp_mlds",
    "mis_layers",
    "parse_points",
    "ptas_lds",
    "read_points",
]
