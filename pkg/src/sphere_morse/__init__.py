"""Simple Morse functions with four critical points on immersed spheres
without triple points: dual trees, Reeb graphs, distinguishing graphs and
catalogs of structures."""

from .catalog import (
    CatalogEntry,
    MorseStructure,
    build_single_curve_catalog,
    build_two_curve_catalog,
    cross_validate,
    enumerate_structures,
    structure_canonical,
)
from .distinguish import (
    DistinguishingGraph,
    MonotonePath,
    PathDecoration,
    dg_canonical,
    dg_equivalent,
    stratum_cycle,
    validate_distinguishing,
)
from .reeb import ReebGraph, betti, enumerate_optimal_reeb, reeb_canonical, validate_reeb
from .strata import (
    ColoredTree,
    PointBudget,
    SurfacePiece,
    Tree,
    ValidationError,
    closure_surface,
    enumerate_pairings,
    enumerate_trees,
    feasible_stratifications,
    min_critical_points,
    point_distributions,
    tree_canonical,
)

__version__ = "0.1.0"
