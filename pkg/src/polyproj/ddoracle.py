"""Brute-force H <-> V conversion for small instances.

This is the ground-truth oracle.  It deliberately uses nothing but subset
enumeration and integer linear algebra written out here, so it shares no
code path with the LP engine it is used to check.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .errors import NotFullDimensional, NotPointed, TooLarge, Unbounded
from .polytope import HPolytope, VPolytope


@dataclass(frozen=True)
class OracleLimits:
    max_dim: int = 12
    max_rows: int = 40
    max_points: int = 40


LIMITS = OracleLimits()


@contextmanager
def oracle_limits(**kw):
    """Temporarily override the guardrails, e.g. ``oracle_limits(max_points=80)``."""
    global LIMITS
    old = LIMITS
    LIMITS = replace(old, **kw)
    try:
        yield LIMITS
    finally:
        LIMITS = old


def _int_row(row):
    L = 1
    for x in row:
        L = lcm(L, Fraction(x).denominator)
    return [int(Fraction(x) * L) for x in row]


def _prim(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


def _gauss_jordan(M, ncols):
    """Fraction-free Gauss-Jordan on integer rows (in place).

    Returns ``(pivots, D)``: pivot (row, col) pairs and the common scale, so
    that pivot row ``r`` reads ``D * x_c + (free part) = rhs``.
    """
    D = 1
    pivots = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if sel is None:
            continue
        M[r], M[sel] = M[sel], M[r]
        p = M[r][c]
        if p < 0:
            M[r] = [-x for x in M[r]]
            p = -p
        pr = M[r]
        for i in range(len(M)):
            if i != r:
                f = M[i][c]
                M[i] = [(x * p - f * y) // D for x, y in zip(M[i], pr)]
        D = p
        pivots.append((r, c))
        r += 1
        if r == len(M):
            break
    return pivots, D


def _rank(rows, ncols):
    M = [list(r) for r in rows]
    return len(_gauss_jordan(M, ncols)[0]) if M else 0


def _null_vector(rows, ncols):
    """The kernel direction of integer ``rows`` if the kernel is 1-dimensional."""
    M = [list(r) for r in rows]
    pivots, D = _gauss_jordan(M, ncols)
    if len(pivots) != ncols - 1:
        return None
    pcols = {c for _, c in pivots}
    free = next(c for c in range(ncols) if c not in pcols)
    v = [0] * ncols
    v[free] = D
    for r, c in pivots:
        v[c] = -M[r][free]
    return _prim(v)


def _check_size(dim, count, limit, what):
    if dim > LIMITS.max_dim or count > limit:
        raise TooLarge(f"{what}: dim {dim}, {count} items exceeds oracle guardrail")


def h_to_v(P: HPolytope) -> VPolytope:
    """All vertices of a bounded H-polytope by trying every n-subset of rows."""
    n = P.dim
    _check_size(n, P.m, LIMITS.max_rows, "h_to_v")
    rows = [_int_row(tuple(a) + (bi,)) for a, bi in zip(P.A, P.b)]
    eqs = [_int_row(tuple(e) + (fi,)) for e, fi in zip(P.eq_A, P.eq_b)]
    if _cone_has_ray([r[:n] for r in rows], [e[:n] for e in eqs], n):
        raise Unbounded("h_to_v needs a bounded polytope")
    need = n - _rank([e[:n] for e in eqs], n) if eqs else n
    verts = set()
    for S in combinations(range(len(rows)), need):
        M = [list(e) for e in eqs] + [list(rows[i]) for i in S]
        pivots, D = _gauss_jordan(M, n)
        if len(pivots) != n:
            continue
        if any(row[n] != 0 for row in M[len(pivots):]):
            continue
        num = [0] * n
        for r, c in pivots:
            num[c] = M[r][n]
        if all(sum(a * x for a, x in zip(row[:n], num)) <= row[n] * D for row in rows):
            verts.add(tuple(Fraction(x, D) for x in num))
    return VPolytope(sorted(verts), n)


def _cone_has_ray(A, E, n):
    """Whether ``{A d <= 0, E d = 0}`` contains a nonzero vector."""
    if _rank(list(A) + list(E), n) < n:
        return True
    return bool(_cone_rays_int(A, E, n))


def _cone_rays_int(A, E, n):
    """Extreme rays of ``{A d <= 0, E d = 0}`` (assumed pointed) as primitive ints."""
    need = n - 1 - (_rank(E, n) if E else 0)
    if need < 0:
        return set()
    rays = set()
    for S in combinations(range(len(A)), need):
        v = _null_vector(list(E) + [A[i] for i in S], n)
        if v is None:
            continue
        for cand in (v, tuple(-x for x in v)):
            if all(sum(a * x for a, x in zip(row, cand)) <= 0 for row in A):
                rays.add(cand)
    return rays


def _affine_rank(points):
    if not points:
        return -1
    p0 = points[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in points[1:]]
    return _rank(diffs, len(p0)) if diffs else 0


def v_to_h(Q: VPolytope) -> HPolytope:
    """Facets of conv(points) by trying every d-subset of points as a hyperplane."""
    d = Q.dim
    pts = sorted(set(Q.points))
    _check_size(d, len(pts), LIMITS.max_points, "v_to_h")
    L = 1
    for p in pts:
        for x in p:
            L = lcm(L, x.denominator)
    ints = [tuple(int(x * L) for x in p) for p in pts]
    if _affine_rank(ints) < d:
        raise NotFullDimensional("v_to_h needs a full-dimensional point set")
    hom = [p + (1,) for p in ints]
    facets = set()
    for S in combinations(range(len(hom)), d):
        h = _null_vector([hom[i] for i in S], d + 1)
        if h is None:
            continue
        sign = 0
        for q in hom:
            s = sum(a * x for a, x in zip(h, q))
            if s > 0:
                if sign < 0:
                    break
                sign = 1
            elif s < 0:
                if sign > 0:
                    break
                sign = -1
        else:
            if sign > 0:
                h = tuple(-x for x in h)
            # h . (x, 1) <= 0  <=>  a.x <= -h_d / L in the original scale
            a = h[:d]
            b = Fraction(-h[d], L)
            facets.add(_prim(_int_row(a + (b,))))
    rows = sorted(facets)
    return HPolytope(
        [tuple(Fraction(x) for x in r[:d]) for r in rows],
        [Fraction(r[d]) for r in rows],
        dim=d,
    )


def cone_rays(A, n: int):
    """Extreme rays of the pointed cone ``{A d <= 0}`` (primitive, sorted)."""
    A = [_int_row(a) for a in A]
    _check_size(n, len(A), LIMITS.max_rows, "cone_rays")
    if _rank(A, n) < n:
        raise NotPointed("cone has a nontrivial lineality space")
    return sorted(tuple(Fraction(x) for x in r) for r in _cone_rays_int(A, [], n))


def cone_facets(rays, n: int):
    """Facet normals ``h`` with ``cone(rays) = {x : h.x <= 0 for all h}``."""
    R = [_prim(_int_row(r)) for r in rays]
    _check_size(n, len(R), LIMITS.max_points, "cone_facets")
    if _rank(R, n) < n:
        raise NotFullDimensional("rays do not span R^n")
    out = set()
    for S in combinations(range(len(R)), n - 1):
        h = _null_vector([R[i] for i in S], n)
        if h is None:
            continue
        sides = {(s > 0) - (s < 0) for s in (sum(a * x for a, x in zip(h, r)) for r in R)}
        if sides <= {0, 1}:
            h = tuple(-x for x in h)
            sides = {-s for s in sides}
        if sides <= {0, -1}:
            out.add(h)
    return sorted(tuple(Fraction(x) for x in h) for h in out)
