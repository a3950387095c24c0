"""Minimum cycle bases of weighted partial 2-trees via lex short cycles."""

from .graph import (
    Cycle,
    CycleSet,
    GraphError,
    WeightedGraph,
    blocks,
    incidence_vector,
    parse_graph,
    serialize_graph,
)
from .lexpath import LspTable, Path, brute_force_lsp, compare_paths, lex_shortest_paths_from, lsp_table
from .lsc import enumerate_all_simple_cycles, enumerate_lex_short_cycles, is_lex_short
from .mcb import CycleBasis, gf2_rank, horton_mcb, mcb_partial_2tree, verify_cycle_basis
from .structure import (
    DecompResult,
    choose_avoiding_component,
    decomp,
    find_three_component_separator,
    is_outerplanar,
    is_partial_2tree,
)

__version__ = "0.1.0"
