"""Exact distances, diameters, and diameter bounds for circulant graphs C_n(1, s).

The fast path computes distances by minimizing over a small set of
canonical path classes and never touches an explicit graph; an independent
breadth-first-search oracle provides ground truth for testing.  Closed-form
diameter values and constructed peripheral vertices are available for the
parameter regimes that admit them.
"""
from .bounds import BoundsReport, bounds_report
from .diameter import DiameterResult, diameter_exact, eccentricity_profile
from .distance import DistanceResult, distance, distance_from_zero, distance_range
from .formulas import (
    FormulaCase,
    FormulaResult,
    classify_case,
    diameter_formula,
    formula_witness,
)
from .oracle import ExplicitGraph, bfs_distances, build_adjacency, oracle_diameter
from .params import (
    CirculantParams,
    DecompositionContext,
    OutOfRangeError,
    VertexOutOfRangeError,
    decompose,
    validate_params,
)
from .paths import (
    Direction,
    Family,
    InconsistentClassError,
    PathClass,
    ResidueDecomposition,
    WalkSpec,
    canonical_classes,
    classes_equivalent,
    realize_path,
    reduce_walk,
    render_path,
    residues,
    translate_endpoints,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "CirculantParams",
    "DecompositionContext",
    "DiameterResult",
    "Direction",
    "DistanceResult",
    "ExplicitGraph",
    "Family",
    "FormulaCase",
    "FormulaResult",
    "InconsistentClassError",
    "OutOfRangeError",
    "PathClass",
    "ResidueDecomposition",
    "VertexOutOfRangeError",
    "WalkSpec",
    "bfs_distances",
    "bounds_report",
    "build_adjacency",
    "canonical_classes",
    "classes_equivalent",
    "classify_case",
    "decompose",
    "diameter_exact",
    "diameter_formula",
    "distance",
    "distance_from_zero",
    "distance_range",
    "eccentricity_profile",
    "formula_witness",
    "oracle_diameter",
    "realize_path",
    "reduce_walk",
    "render_path",
    "residues",
    "translate_endpoints",
    "validate_params",
]
