"""Exact decision procedures for sets of arcs on the integer line.

Sets of arcs model subcategories of the cluster category of type A-infinity;
the package decides ort-closedness, precovering, torsion classes and
(co-)t-structure aisles for possibly infinite sets given as unions of
integer trapezoids.
"""

from .arcs import Arc, Window, cross, hom_dim, hom_nonzero, mirror_arc, parse_arc, parse_window, shift_arc
from .classify import (
    AisleType,
    ClassificationReport,
    Kind,
    Verdict,
    check_condition_i,
    check_condition_ii,
    classify,
    classify_co_t_structure,
    classify_t_structure,
    is_ort_closed,
    is_precovering,
    is_preenveloping,
    is_torsion_class,
    left_perp,
    preenvelope_construct,
    precover_construct,
    right_perp,
)
from .dsl import DslError, DslSemanticError, DslSyntaxError, format_region, parse_region
from .errors import InvalidArc, PreconditionError, TheoremViolation
from .hammocks import hammock_from, hammock_to
from .intervals import INF, IntInterval, IntervalSet
from .ort import FountainProfile, closure, cross_set, fountains, is_locally_finite, ort
from .region import (
    ArcRegion,
    Trapezoid,
    box,
    complement,
    difference,
    enumerate_window,
    equals,
    intersect,
    is_empty,
    is_subset,
    leftray,
    lower,
    member,
    mirror_region,
    rightray,
    shift_region,
    union,
    upper,
)

__all__ = [name for name in dir() if not name.startswith("_")]
