"""Lorenz link engine: parameterizations, braids, grids, invariants and verification"""

from lorenz_links.topology.braid import BraidWord, closure_planar, lorenz_word, make_braid, tlink_word
from lorenz_links.topology.errors import CrossingLimitExceeded, InvariantError, LinkInputError
from lorenz_links.topology.grid import GridDiagram, build_grid, grid_to_planar
from lorenz_links.topology.invariants import InvariantReport, alexander, full_report, normalized_f
from lorenz_links.topology.laurent import LaurentPoly
from lorenz_links.topology.lorenz_core import (
    LorenzVector,
    Shuffle,
    TLinkParams,
    compress,
    decompress,
    make_tlink,
    make_vector,
    shuffle_from_vector,
)
from lorenz_links.topology.pipeline import BatteryResult, InstanceResult, VerificationPipeline

__all__ = [
    "BatteryResult",
    "BraidWord",
    "CrossingLimitExceeded",
    "GridDiagram",
    "InstanceResult",
    "InvariantError",
    "InvariantReport",
    "LaurentPoly",
    "LinkInputError",
    "LorenzVector",
    "Shuffle",
    "TLinkParams",
    "VerificationPipeline",
    "alexander",
    "build_grid",
    "closure_planar",
    "compress",
    "decompress",
    "full_report",
    "grid_to_planar",
    "lorenz_word",
    "make_braid",
    "make_tlink",
    "make_vector",
    "normalized_f",
    "shuffle_from_vector",
    "tlink_word",
]
