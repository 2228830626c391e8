"""Clique covers, compressed cliques graphs and positive zero forcing on small graphs."""

from __future__ import annotations

from .cliques import (CliqueCover, NotACover, certify, clique_cover_number,
                      clique_number, enumerate_minimum_covers,
                      enumerate_minmax_si_covers, has_simple_intersection,
                      is_simply_coverable, maximal_cliques, maximalize_cover,
                      minimum_cover)
from .compressed import (CompressedGraph, NotSimplyCoverable, cells, compress,
                         compressed_cliques_graph, induced_cover,
                         is_self_compressed, phi_map)
from .detect import (check_compressed_candidate, find_claw, find_diamond,
                     find_suspended_cycle)
from .families import FamilySpec, generate, parse_family, vertex_clique_graph
from .forcing import (ForcingForest, ForcingRecord, forcing_forest,
                      positive_closure, reduced_graph, standard_zero_forcing,
                      zplus, zplus_number)
from .graph import (Graph, GraphError, are_isomorphic, closed_neighborhood,
                    connected_components, contract_set, find_induced,
                    induced_subgraph, vertex_cap)
from .io import emit_graph, from_graph6, parse_graph, to_graph6

__version__ = "0.1.0"

__all__ = [
    "CliqueCover",
    "CompressedGraph",
    "FamilySpec",
    "ForcingForest",
    "ForcingRecord",
    "Graph",
    "GraphError",
    "NotACover",
    "NotSimplyCoverable",
    "annotations",
    "are_isomorphic",
    "cells",
    "certify",
    "check_compressed_candidate",
    "clique_cover_number",
    "clique_number",
    "closed_neighborhood",
    "compress",
    "compressed_cliques_graph",
    "connected_components",
    "contract_set",
    "emit_graph",
    "enumerate_minimum_covers",
    "enumerate_minmax_si_covers",
    "find_claw",
    "find_diamond",
    "find_induced",
    "find_suspended_cycle",
    "forcing_forest",
    "from_graph6",
    "generate",
    "has_simple_intersection",
    "induced_cover",
    "induced_subgraph",
    "is_self_compressed",
    "is_simply_coverable",
    "maximal_cliques",
    "maximalize_cover",
    "minimum_cover",
    "parse_family",
    "parse_graph",
    "phi_map",
    "positive_closure",
    "reduced_graph",
    "standard_zero_forcing",
    "to_graph6",
    "vertex_cap",
    "vertex_clique_graph",
    "zplus",
    "zplus_number",
]
