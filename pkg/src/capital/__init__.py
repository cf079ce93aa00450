"""Unique-maximum ("capital") colourings of plane graphs."""

from .core import colour5, validate_capital
from .discharging import audit
from .exact import SolveBudget, capital_list_colouring, chi_capital
from .generators import generate
from .plane_graph import PlaneGraph, build_from_rotation, from_json, to_json
from .rbb import RBBRequest, check_conditions, oracle_rbb, recursive_rbb
from .triangle_free import three_colour

__all__ = [
    "PlaneGraph",
    "RBBRequest",
    "SolveBudget",
    "audit",
    "build_from_rotation",
    "capital_list_colouring",
    "check_conditions",
    "chi_capital",
    "colour5",
    "from_json",
    "generate",
    "oracle_rbb",
    "recursive_rbb",
    "three_colour",
    "to_json",
    "validate_capital",
]
