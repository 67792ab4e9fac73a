"""Vertices and facets of a projection via a convex-hull oracle.

The current vertex list V only ever holds true vertices of the shadow.  Each
facet of conv(V) either supports the shadow, or its lifted hyperplane cuts
through the interior of P; in the second case the LP maximising the facet
normal over P reaches a vertex of the shadow beyond the facet.  When no hull
facet cuts P, V is complete and the hull facets are the shadow's facets.
Degenerate directions are fine here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import ddoracle, lp
from .errors import (
    Empty,
    NotFullDimensional,
    OracleTooLarge,
    TooLarge,
    Unbounded,
    ZeroVector,
)
from .exactmath import ONE, ZERO, dot, kernel, rank, unit, vec
from .polytope import (
    DirectionSet,
    HPolytope,
    HVPolytope,
    VPolytope,
    normalize_row,
    sorted_h,
)

Hull = Callable[[VPolytope], HPolytope]


@dataclass(frozen=True)
class LiftedHyperplane:
    """``normal_proj . x = rhs`` in projection space, i.e. ``(normal_proj, 0) . w = rhs``."""

    normal_proj: tuple
    rhs: object

    def __post_init__(self):
        a = vec(self.normal_proj)
        if not any(a):
            raise ZeroVector("lifted hyperplane needs a nonzero normal")
        object.__setattr__(self, "normal_proj", a)
        object.__setattr__(self, "rhs", vec([self.rhs])[0])

    def lifted(self, k: int) -> tuple:
        return self.normal_proj + (ZERO,) * k


class _Lifted:
    """P in transformed coordinates with its implicit equalities split off."""

    def __init__(self, P: HPolytope, G: DirectionSet):
        T = G.transform_h(P)
        imp = lp.implicit_equalities(T.A, T.b, T.eq_A, T.eq_b)
        if imp is None:
            raise Empty("polytope is empty")
        self.T = T
        self.G = G
        self.ineq = [i for i in range(T.m) if i not in imp]
        self.E = list(T.eq_A) + [T.A[i] for i in sorted(imp)]
        self.f = list(T.eq_b) + [T.b[i] for i in sorted(imp)]

    def proper(self, h: LiftedHyperplane) -> bool:
        """Does ``h`` meet the relative interior of P?"""
        n = self.T.dim
        rows = [self.T.A[i] + (ONE,) for i in self.ineq]
        rhs = [self.T.b[i] for i in self.ineq]
        rows.append((ZERO,) * n + (ONE,))
        rhs.append(ONE)
        E = [e + (ZERO,) for e in self.E] + [h.lifted(self.G.k) + (ZERO,)]
        f = self.f + [h.rhs]
        res = lp.solve_lp(rows, rhs, (ZERO,) * n + (ONE,), E, f)
        return isinstance(res, lp.LpOptimal) and res.value > 0

    def vertex(self, c) -> tuple:
        """Projection of the lexicographically best vertex of P for objective ``c``."""
        n = self.T.dim
        ties = [unit(n, i) for i in range(n)]
        w = lp.lex_optimal_vertex(self.T, tuple(c) + (ZERO,) * self.G.k, ties)
        return tuple(w[: self.G.d])


def proper_intersection(P: HPolytope, G: DirectionSet, h: LiftedHyperplane) -> bool:
    """Whether the lifted hyperplane ``h`` meets the relative interior of ``P``."""
    return _Lifted(P, G).proper(h)


def next_vertex(P: HPolytope, G: DirectionSet, h: LiftedHyperplane) -> tuple:
    """Shadow vertex maximising ``h``'s normal, lexicographic ties broken by coordinates."""
    return _Lifted(P, G).vertex(h.normal_proj)


def _affinely_independent(points, d):
    keep = []
    for p in points:
        trial = keep + [p]
        diffs = [tuple(x - y for x, y in zip(q, trial[0])) for q in trial[1:]]
        if not diffs or rank(diffs) == len(diffs):
            keep.append(p)
        if len(keep) == d + 1:
            break
    return keep


def _seed(L: _Lifted, d: int) -> list:
    found = []
    for i in range(d):
        for s in (ONE, -ONE):
            c = tuple(s if j == i else ZERO for j in range(d))
            x = L.vertex(c)
            if x not in found:
                found.append(x)
    V = _affinely_independent(found, d)
    while len(V) < d + 1:
        diffs = [tuple(x - y for x, y in zip(q, V[0])) for q in V[1:]]
        u = kernel(diffs, d)[0] if diffs else unit(d, 0)
        base = dot(u, V[0])
        for c in (u, tuple(-x for x in u)):
            x = L.vertex(c)
            if dot(u, x) != base:
                V.append(x)
                break
        else:
            raise NotFullDimensional("the projection is not full-dimensional")
    return V


def _hull(hull: Hull, V, d) -> HPolytope:
    try:
        return hull(VPolytope(V, d))
    except TooLarge as exc:
        raise OracleTooLarge(str(exc)) from exc


def enumerate_hv(
    P: HPolytope, G: DirectionSet, hull: Hull = ddoracle.v_to_h, certificate: list | None = None
) -> HVPolytope:
    """Both canonical descriptions of the projection of ``P`` along ``G``.

    ``hull`` maps a full-dimensional point set to its facets.  When
    ``certificate`` is a list, the final hull facets are appended to it; each
    one's lifted hyperplane misses the relative interior of P.
    """
    d = G.d
    if d == 0:
        return HVPolytope(HPolytope((), (), dim=0), VPolytope([()], 0))
    if not lp.is_bounded(P.A, P.b, P.eq_A, P.eq_b, P.dim):
        raise Unbounded("enumerate_hv needs a bounded polytope")
    L = _Lifted(P, G)
    V = _seed(L, d)
    settled = set()
    while True:
        H = _hull(hull, V, d)
        new = []
        for a, b in zip(H.A, H.b):
            key = normalize_row(a, b)
            if key in settled:
                continue
            h = LiftedHyperplane(a, b)
            if L.proper(h):
                x = L.vertex(a)
                assert dot(a, x) > b
                if x not in V and x not in new:
                    new.append(x)
            else:
                settled.add(key)
        if not new:
            break
        V.extend(new)
    H = sorted_h(H)
    if certificate is not None:
        certificate.extend(LiftedHyperplane(a, b) for a, b in zip(H.A, H.b))
    return HVPolytope(H, VPolytope(sorted(V), d))
