"""Constructive decompositions and improper colourings of graphs that
exclude a complete or complete-bipartite minor, with brute-force oracles
that re-check every claimed bound."""

from __future__ import annotations

from .bipartite import (
    colour_k2t_defect,
    colour_k3t,
    decompose_k2t,
    decompose_k3t,
    decompose_kst,
    separator_ab,
    three_colour_k2t,
)
from .colnums import (
    LayeredTD,
    exact_scol,
    exact_wcol,
    grid_layered_td,
    layered_ordering,
    scol,
    sreach,
    wcol,
    wreach,
)
from .errors import BoundViolation, DecompositionError, GraphError, ParseError, PartitionError
from .graph import Graph, from_edge_list, from_json, to_dot, to_edge_list, to_json
from .immersion import CutTree, TPartition, tpartition_2colour, tree_cut_2colour
from .ktdecomp import colour_kt, decompose_kt
from .lexbfs import LexTree, lexbfs_tree, subtree_to
from .minors import DecompositionOutcome, MinorModel, Pattern
from .oracles import has_minor, validate_colouring, validate_minor_model
from .ordering import VertexOrdering
from .partition import Colouring, ConnectedPartition, partition_ordering, validate_partition
from .skeleton import Skeleton, build_skeleton

__all__ = [
    "BoundViolation", "Colouring", "ConnectedPartition", "CutTree", "DecompositionError",
    "DecompositionOutcome", "Graph", "GraphError", "LayeredTD", "LexTree", "MinorModel",
    "ParseError", "PartitionError", "Pattern", "Skeleton", "TPartition", "VertexOrdering",
    "build_skeleton", "colour_k2t_defect", "colour_k3t", "colour_kt", "decompose_k2t",
    "decompose_k3t", "decompose_kst", "decompose_kt", "exact_scol", "exact_wcol",
    "from_edge_list", "from_json", "grid_layered_td", "has_minor", "layered_ordering",
    "lexbfs_tree", "partition_ordering", "scol", "separator_ab", "sreach", "subtree_to",
    "three_colour_k2t", "to_dot", "to_edge_list", "to_json", "tpartition_2colour",
    "tree_cut_2colour", "validate_colouring", "validate_minor_model", "validate_partition",
    "wcol", "wreach",
]
