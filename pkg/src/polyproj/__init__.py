"""Exact projections of convex polytopes.

Polytopes are given by inequalities (:class:`HPolytope`) or points
(:class:`VPolytope`) with rational data, and projected orthogonally along a
:class:`DirectionSet`.  Several independent pipelines are provided:

* :func:`project_fm`: Fourier-Motzkin elimination.
* :func:`project_v`: project points, then drop non-vertices.
* :func:`enumerate_shadow_facets`: output-sensitive facet walk.
* :func:`enumerate_hv`: vertices and facets through a hull oracle.
"""

from .errors import *  # noqa: F401,F403
from .exactmath import Rat, orth_complement_basis, primitive, rat, solve_linear
from .fm import eliminate_equalities, eliminate_one, project_fm
from .gadgets import (
    AffineMapSpec,
    Cone,
    check_projection_equals,
    intersection_gadget,
    lift_to_simplex,
    sample_directions,
    simplex_h,
    truncate_cone,
)
from .hvproj import LiftedHyperplane, enumerate_hv, next_vertex, proper_intersection
from .lp import interior_point, is_redundant, lex_optimal_vertex, maximize
from .metrics import collect
from .polytope import (
    DirectionSet,
    HPolytope,
    HVPolytope,
    VPolytope,
    canonical_h,
    canonical_v,
    cube,
    recenter,
)
from .shadow import (
    FaceRef,
    NormalSegment,
    enumerate_shadow_facets,
    initial_facet,
    preimage_facets,
    ridge_candidates,
    ridge_segment,
)
from .vproj import project_points, project_v

__version__ = "0.1.0"
