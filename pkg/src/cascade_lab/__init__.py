"""Kostant cascade and coadjoint invariants of parabolic nilradicals, in exact arithmetic."""
from .cascade import Cascade, CascadeElement, compute_cascade, hasse_edges, phi_inverse
from .classify import classify, has_cp, is_square_integrable
from .nilradical import Nilradical, build_nilradical, is_optimal, optimisation
from .rootsys import RootSystem, SimpleType, build_root_system
from .stabiliser import StabiliserReport, cascade_stabiliser, full_report

__version__ = "0.1.0"

__all__ = [
    "Cascade",
    "CascadeElement",
    "Nilradical",
    "RootSystem",
    "SimpleType",
    "StabiliserReport",
    "build_nilradical",
    "build_root_system",
    "cascade_stabiliser",
    "classify",
    "compute_cascade",
    "full_report",
    "has_cp",
    "hasse_edges",
    "is_optimal",
    "is_square_integrable",
    "optimisation",
    "phi_inverse",
]
