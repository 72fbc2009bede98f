"""Least (a, b)-majorized elements of submodular-type polyhedra over small ground sets."""

from .characterize import PointSet, characterize, least_in
from .kernels import BACKEND
from .majorization import ScalingShift, ab_compare, classical_compare, is_least_element
from .optimize import (
    LeastElementRequest,
    UnsupportedError,
    frank_wolfe,
    least_element,
    min_quadratic_base,
    min_quadratic_base_integral,
    min_quadratic_bisub,
)
from .polyhedra import Polyhedron, greedy_vertex, member, signed_greedy_vertex
from .setfn import BisetFunction, SetFunction

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BisetFunction",
    "LeastElementRequest",
    "PointSet",
    "Polyhedron",
    "ScalingShift",
    "SetFunction",
    "UnsupportedError",
    "ab_compare",
    "characterize",
    "classical_compare",
    "frank_wolfe",
    "greedy_vertex",
    "is_least_element",
    "least_element",
    "least_in",
    "member",
    "min_quadratic_base",
    "min_quadratic_base_integral",
    "min_quadratic_bisub",
    "signed_greedy_vertex",
]
