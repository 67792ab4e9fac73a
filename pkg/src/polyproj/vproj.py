"""Projection of V-polytopes: map the points, drop the non-vertices."""

from __future__ import annotations

from .errors import DimensionMismatch
from .polytope import DirectionSet, VPolytope, canonical_v


def project_points(Q: VPolytope, G: DirectionSet) -> tuple:
    """Complement-basis coordinates of every point (no dedup, no pruning)."""
    if Q.dim != G.n:
        raise DimensionMismatch(f"points in R^{Q.dim}, directions in R^{G.n}")
    return tuple(G.project(p) for p in Q.points)


def project_v(Q: VPolytope, G: DirectionSet) -> VPolytope:
    """Vertices of the projection of conv(Q), one LP per distinct projected point."""
    return canonical_v(VPolytope(project_points(Q, G), G.d))
