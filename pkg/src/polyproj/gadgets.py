"""Constructions that move between representations and decision problems.

* ``lift_to_simplex``: any V-polytope is the shadow of a simplex.
* ``intersection_gadget``: an H-system whose shadow is ``P`` cut by ``conv(Q)``.
* ``truncate_cone``: cut a pointed cone into a pyramid whose shadow's
  vertices match the extreme rays of the cone's shadow.
* ``sample_directions`` and ``check_projection_equals``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from . import ddoracle, lp
from .errors import DimensionMismatch, NotPointed, ProjectionFull
from .exactmath import ONE, ZERO, dot, gram_schmidt, rank, unit, vec
from .hvproj import enumerate_hv
from .polytope import (
    AffineMap,
    DirectionSet,
    HPolytope,
    VPolytope,
    canonical_h,
    canonical_v,
    in_convex_hull,
)

AffineMapSpec = AffineMap


@dataclass(frozen=True)
class Cone:
    """A polyhedral cone, as ``{z : A z <= 0}`` (``facets``) or as ``cone(rays)``."""

    dim: int
    facets: tuple | None = None
    rays: tuple | None = None

    def __post_init__(self):
        if (self.facets is None) == (self.rays is None):
            raise ValueError("give exactly one of facets or rays")
        rows = self.facets if self.facets is not None else self.rays
        rows = tuple(vec(r) for r in rows)
        if any(len(r) != self.dim for r in rows):
            raise DimensionMismatch(f"cone rows must live in R^{self.dim}")
        object.__setattr__(self, "facets" if self.facets is not None else "rays", rows)

    @property
    def pointed(self) -> bool:
        if self.facets is not None:
            return rank(self.facets) == self.dim if self.facets else self.dim == 0
        return _positive_functional(self.rays, (), self.dim) is not None


def _positive_functional(rays, directions, n):
    """Some ``y`` with ``y . r > 0`` for every ray and ``y . g = 0`` for every direction."""
    rows = [tuple(-x for x in r) + (ONE,) for r in rays]
    rows.append((ZERO,) * n + (ONE,))
    rhs = [ZERO] * len(rays) + [ONE]
    E = [tuple(g) + (ZERO,) for g in directions]
    res = lp.solve_lp(rows, rhs, (ZERO,) * n + (ONE,), E, [ZERO] * len(E))
    if isinstance(res, lp.LpOptimal) and res.value > 0:
        return res.point[:n]
    return None


def lift_to_simplex(Q: VPolytope):
    """``(simplex, G)``: point i is ``(v_i, e_i)`` with ``e_0 = 0``; G spans the new axes."""
    pts = Q.points
    n, m = Q.dim, len(pts)
    lifted = []
    for i, p in enumerate(pts):
        block = unit(m - 1, i - 1) if i else (ZERO,) * (m - 1)
        lifted.append(tuple(p) + block)
    G = DirectionSet.make([unit(n + m - 1, n + j) for j in range(m - 1)], n + m - 1)
    return VPolytope(lifted, n + m - 1), G


def simplex_h(Q: VPolytope) -> HPolytope:
    """Facets of :func:`lift_to_simplex`'s simplex, with its affine hull as equalities.

    Over ``(x, lam)``: ``lam >= 0``, ``sum lam <= 1`` and
    ``x - sum_j lam_j (v_j - v_0) = v_0``, with v_0 the first point of Q.
    """
    pts = Q.points
    n, p = Q.dim, len(pts) - 1
    A = [(ZERO,) * n + tuple(-ONE if i == j else ZERO for i in range(p)) for j in range(p)]
    b = [ZERO] * p
    if p:
        A.append((ZERO,) * n + (ONE,) * p)
        b.append(ONE)
    v0 = pts[0]
    E = [unit(n, i) + tuple(v0[i] - v[i] for v in pts[1:]) for i in range(n)]
    return HPolytope(A, b, E, v0, dim=n + p)


def intersection_gadget(P: HPolytope, Q: VPolytope):
    """H-system ``R`` over ``(x, lam)`` whose x-shadow is ``P`` intersected with conv(Q).

    With ``v0`` the lexicographically smallest point of Q and ``lam`` the
    weights of the others, R is ``A x <= b``, ``lam >= 0``, ``sum lam <= 1``
    and ``x - sum lam_j (v_j - v0) = v0``.  Returns ``(R, x_of_lam)``.
    """
    if P.dim != Q.dim:
        raise DimensionMismatch(f"P in R^{P.dim}, Q in R^{Q.dim}")
    pts = sorted(set(Q.points))
    v0, rest = pts[0], pts[1:]
    d, p = P.dim, len(rest)
    A = [tuple(a) + (ZERO,) * p for a in P.A]
    b = list(P.b)
    for j in range(p):
        A.append((ZERO,) * d + tuple(-ONE if i == j else ZERO for i in range(p)))
        b.append(ZERO)
    if p:
        A.append((ZERO,) * d + (ONE,) * p)
        b.append(ONE)
    M = tuple(tuple(v[i] - v0[i] for v in rest) for i in range(d))
    E = [unit(d, i) + tuple(-x for x in M[i]) for i in range(d)]
    R = HPolytope(A, b, E, v0, dim=d + p)
    return R, AffineMapSpec(M, v0)


def gadget_directions(P: HPolytope, Q: VPolytope) -> DirectionSet:
    """The weight axes of :func:`intersection_gadget`'s output."""
    d, p = P.dim, len(set(Q.points)) - 1
    return DirectionSet.make([unit(d + p, d + j) for j in range(p)], d + p)


class Truncation(NamedTuple):
    polytope: HPolytope
    alpha: tuple


def truncate_cone(W: Cone, G: DirectionSet) -> Truncation:
    """``W`` cut by ``alpha . z <= 1`` with ``alpha`` orthogonal to G.

    ``alpha`` is strictly positive on ``W \\ {0}``, so the cut is a bounded
    pyramid with apex 0.  Raises ProjectionFull when no such ``alpha``
    exists, which happens exactly when the projection of W is not pointed.
    """
    n = W.dim
    if G.n != n:
        raise DimensionMismatch(f"cone in R^{n}, directions in R^{G.n}")
    if not W.pointed:
        raise NotPointed("cone has a nontrivial lineality space")
    if W.facets is not None:
        # alpha = -sum mu_i a_i with every mu_i >= t > 0 is interior to the dual
        A = W.facets
        m = len(A)
        rows = [tuple(-ONE if j == i else ZERO for j in range(m)) + (ONE,) for i in range(m)]
        rows.append((ZERO,) * m + (ONE,))
        rhs = [ZERO] * m + [ONE]
        E = [tuple(-dot(a, g) for a in A) + (ZERO,) for g in G.directions]
        res = lp.solve_lp(rows, rhs, (ZERO,) * m + (ONE,), E, [ZERO] * len(E))
        if not (isinstance(res, lp.LpOptimal) and res.value > 0):
            raise ProjectionFull("projection of the cone is not pointed")
        mu = res.point[:m]
        alpha = tuple(-sum((u * a[j] for u, a in zip(mu, A)), ZERO) for j in range(n))
        Q = canonical_h(HPolytope(list(A) + [alpha], [ZERO] * m + [ONE], dim=n))
    else:
        alpha = _positive_functional(W.rays, G.directions, n)
        if alpha is None:
            raise ProjectionFull("projection of the cone is not pointed")
        apex = [(ZERO,) * n]
        tips = [tuple(x / dot(alpha, r) for x in r) for r in W.rays]
        Q = ddoracle.v_to_h(VPolytope(apex + tips, n))
    return Truncation(Q, alpha)


def sample_directions(n: int, k: int, seed: int, coeff_bound: int = 100, attempts: int = 1000):
    """k random orthogonal integer directions in R^n, deterministic in ``seed``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    for _ in range(attempts):
        raw = [[rng.randint(-coeff_bound, coeff_bound) for _ in range(n)] for _ in range(k)]
        if k and rank(raw) < k:
            continue
        return DirectionSet.make(gram_schmidt(raw), n)
    raise ValueError("could not sample independent directions; raise coeff_bound")


class EqualityCheck(NamedTuple):
    equal: bool
    witness: tuple | None = None
    # "projection": witness lies in the projection but not in Q;
    # "candidate": witness lies in Q but not in the projection
    side: str | None = None


def check_projection_equals(P: HPolytope, G: DirectionSet, Q) -> EqualityCheck:
    """Decide whether the projection of ``P`` along ``G`` is exactly ``Q``."""
    if Q.dim != G.d:
        raise DimensionMismatch(f"candidate in R^{Q.dim}, projection in R^{G.d}")
    hv = enumerate_hv(P, G)
    if isinstance(Q, HPolytope):
        if canonical_h(Q) == hv.h:
            return EqualityCheck(True)
        for v in hv.v.points:
            if not Q.contains(v):
                return EqualityCheck(False, v, "projection")
        for a, b in zip(hv.h.A, hv.h.b):
            x = lp.lex_optimal_vertex(Q, a, [unit(Q.dim, i) for i in range(Q.dim)])
            if dot(a, x) > b:
                return EqualityCheck(False, x, "candidate")
    else:
        if canonical_v(Q) == hv.v:
            return EqualityCheck(True)
        for v in hv.v.points:
            if not in_convex_hull(v, Q.points):
                return EqualityCheck(False, v, "projection")
        for x in Q.points:
            if not hv.h.contains(x):
                return EqualityCheck(False, x, "candidate")
    raise AssertionError("canonical forms differ but no witness found")
