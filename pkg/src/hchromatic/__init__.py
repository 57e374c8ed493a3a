"""H-chromatic symmetric functions: exact census, closed forms, equivalence
deciders and distinguishers."""

from .errors import HChromaticError, ParseError, PreconditionError, RefusalError, UnsupportedInputError
from .graphs import Graph, parse_edge_list, parse_graph6, to_edge_list, to_graph6
from .hcolor import ColoringCensus, coloring_census, hcsf, hcsf_naive
from .symfunc import SymFunc, change_basis, omega, rank

__all__ = [
    "ColoringCensus",
    "Graph",
    "HChromaticError",
    "ParseError",
    "PreconditionError",
    "RefusalError",
    "SymFunc",
    "UnsupportedInputError",
    "change_basis",
    "coloring_census",
    "hcsf",
    "hcsf_naive",
    "omega",
    "parse_edge_list",
    "parse_graph6",
    "rank",
    "to_edge_list",
    "to_graph6",
]
