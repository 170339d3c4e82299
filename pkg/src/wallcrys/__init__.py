"""Level-1 Young walls and paths for classical quantum affine algebras."""

from __future__ import annotations

from .cartan import AffineType, AffineWeight, InvalidType, cartan_data, parse_type
from .correspondence import psi, psi_tables, verify_isomorphism
from .crystal_core import CrystalGraph, generate_graph, graphs_bisimilar
from .path_model import PathCrystal, ground_state
from .perfect import check_perfect, perfect_crystal
from .young_wall import YoungWallCrystal, character_table, enumerate_reduced, render_ascii

__all__ = [
    "AffineType",
    "AffineWeight",
    "CrystalGraph",
    "InvalidType",
    "PathCrystal",
    "YoungWallCrystal",
    "cartan_data",
    "character_table",
    "check_perfect",
    "enumerate_reduced",
    "generate_graph",
    "graphs_bisimilar",
    "ground_state",
    "parse_type",
    "perfect_crystal",
    "psi",
    "psi_tables",
    "render_ascii",
    "verify_isomorphism",
]
