"""Splitting cycles on triangular embeddings of complete graphs.

Build embeddings from one-vertex voltage bases over Z_n, enumerate their
splitting cycles with a pruned cycle-tree search, classify cycles by the
genus split, and verify the explicit length-8 families.
"""
from .map_core import (Dart, RotationMap, Subsurface, build_map, faces,
                       genus, is_simplicial_triangulation, cut_along,
                       contract_edge, contractible_edges,
                       glue_along_triangle, parse_rotmap, format_rotmap,
                       read_rotmap, write_rotmap)
from .voltage import (VoltageBaseMap, base_faces, derive, gross_tucker_base,
                      bundled_base, check_translation_automorphism,
                      parse_voltmap, format_voltmap, read_voltmap,
                      write_voltmap)
from .search import (SearchState, SearchOptions, SplitVerdict, TypeRow,
                     TypeTable, enumerate_cycles, verify_cycle,
                     no_interior_bound)
from .families import (FamilyCycle, gamma, gamma_family, type_j_boundary,
                       verify_families)
from .backend import get_backend, backend_name

__version__ = "0.1.0"

__all__ = [
    "Dart", "RotationMap", "Subsurface", "build_map", "faces", "genus",
    "is_simplicial_triangulation", "cut_along", "contract_edge",
    "contractible_edges", "glue_along_triangle", "parse_rotmap",
    "format_rotmap", "read_rotmap", "write_rotmap",
    "VoltageBaseMap", "base_faces", "derive", "gross_tucker_base",
    "bundled_base", "check_translation_automorphism", "parse_voltmap",
    "format_voltmap", "read_voltmap", "write_voltmap",
    "SearchState", "SearchOptions", "SplitVerdict", "TypeRow", "TypeTable",
    "enumerate_cycles", "verify_cycle", "no_interior_bound",
    "FamilyCycle", "gamma", "gamma_family", "type_j_boundary",
    "verify_families", "get_backend", "backend_name",
]
