"""Maximal arcs in projective planes of even order, their Steiner designs and binary codes."""

from .arcs import Arc, SearchConfig, denniston_arc, dual_arc, tabu_search, validate_arc
from .canonical import canonize, codes_equivalent, designs_isomorphic, verify_table5
from .codes import code_of_design, macwilliams, majority_logic_decode, rank_bounds, weight_distribution
from .designs import (
    Design,
    Resolution,
    design_from_arc,
    enumerate_parallel_classes,
    enumerate_resolutions,
    find_hyperovals,
    resolutions_from_embedding,
)
from .errors import MaxArcsError
from .geometry import Gf2mField, ProjectivePlane, make_pg2
from .gf2 import BinaryCode, BitMatrix, BitVector, dual_code, rank, row_space

__version__ = "0.1.0"
