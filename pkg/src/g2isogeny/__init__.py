"""Explicit (3,3)-isogenies of genus-2 Jacobians over prime fields."""

from .curve import Genus2Curve
from .errors import IsogenyError
from .isogeny import IsogenyResult, isogenous_curve
from .jacobian import MumfordPoint, add, build_subgroup, negate, scalar_mul
from .recovery import EllipticPair, SexticModel, recover
from .verify import count_points, igusa_clebsch, same_invariants, twist_equiv, weil_poly

__all__ = [
    "Genus2Curve", "IsogenyError", "IsogenyResult", "isogenous_curve",
    "MumfordPoint", "add", "build_subgroup", "negate", "scalar_mul",
    "EllipticPair", "SexticModel", "recover",
    "count_points", "igusa_clebsch", "same_invariants", "twist_equiv", "weil_poly",
]
