"""Exact tilt-stability numerics: slopes, walls, BG checks and candidate searches."""

from .core import (
    P3,
    ChernCharacter,
    OutOfDomainError,
    PolarizedThreefold,
    TiltError,
    line_bundle,
    parse_character,
    q_bundle_class,
    twist,
)
from .slopes import INF, SurfacePoint, delta, lambda_slope, mu, nu
from .walls import CircleWall, VerticalWall, classify_pair, intersect, numerical_wall, theta_curve

__all__ = [
    "P3",
    "ChernCharacter",
    "OutOfDomainError",
    "PolarizedThreefold",
    "TiltError",
    "line_bundle",
    "parse_character",
    "q_bundle_class",
    "twist",
    "INF",
    "SurfacePoint",
    "delta",
    "lambda_slope",
    "mu",
    "nu",
    "CircleWall",
    "VerticalWall",
    "classify_pair",
    "intersect",
    "numerical_wall",
    "theta_curve",
]
