"""Polytope representations, canonical forms and recentering."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import lp
from .errors import DimensionMismatch, NotFullDimensional, Unbounded
from .exactmath import (
    ZERO,
    dot,
    orth_complement_basis,
    check_directions,
    primitive,
    vec,
)


@dataclass(frozen=True)
class HPolytope:
    """``{z : A z <= b, eq_A z = eq_b}`` in R^dim."""

    A: tuple
    b: tuple
    eq_A: tuple = ()
    eq_b: tuple = ()
    dim: int = field(default=-1)

    def __post_init__(self):
        A = tuple(vec(a) for a in self.A)
        E = tuple(vec(e) for e in self.eq_A)
        dim = self.dim
        if dim < 0:
            rows = A or E
            if not rows:
                raise ValueError("dimension required for an empty description")
            dim = len(rows[0])
        for row in A + E:
            if len(row) != dim:
                raise DimensionMismatch(f"row {row} does not live in R^{dim}")
        for row in A:
            if not any(row):
                raise ValueError("zero row in inequality description")
        if len(self.b) != len(A) or len(self.eq_b) != len(E):
            raise DimensionMismatch("rhs length differs from row count")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", vec(self.b))
        object.__setattr__(self, "eq_A", E)
        object.__setattr__(self, "eq_b", vec(self.eq_b))
        object.__setattr__(self, "dim", dim)

    @property
    def m(self) -> int:
        return len(self.A)

    def contains(self, z) -> bool:
        z = vec(z)
        return all(dot(a, z) <= bi for a, bi in zip(self.A, self.b)) and all(
            dot(e, z) == fi for e, fi in zip(self.eq_A, self.eq_b)
        )

    def slacks(self, z):
        z = vec(z)
        return tuple(bi - dot(a, z) for a, bi in zip(self.A, self.b))

    def without_equalities(self) -> "HPolytope":
        return HPolytope(self.A, self.b, dim=self.dim)


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of ``points`` in R^dim."""

    points: tuple
    dim: int = -1

    def __post_init__(self):
        pts = tuple(vec(p) for p in self.points)
        dim = self.dim
        if dim < 0:
            if not pts:
                raise ValueError("dimension required for an empty point set")
            dim = len(pts[0])
        for p in pts:
            if len(p) != dim:
                raise DimensionMismatch(f"point {p} does not live in R^{dim}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dim", dim)


@dataclass(frozen=True)
class HVPolytope:
    h: HPolytope
    v: VPolytope


@dataclass(frozen=True)
class DirectionSet:
    """k pairwise orthogonal projection directions in R^n and their complement.

    Transformed coordinates ``w = (x, y)`` are the coefficients of a point in
    the basis (complement..., directions...); ``x`` are the coordinates of
    its orthogonal projection.
    """

    directions: tuple
    complement: tuple
    n: int

    @classmethod
    def make(cls, directions, n: int) -> "DirectionSet":
        dirs = check_directions(directions, n)
        return cls(dirs, orth_complement_basis(dirs, n), n)

    @property
    def k(self) -> int:
        return len(self.directions)

    @property
    def d(self) -> int:
        return self.n - self.k

    @property
    def basis(self) -> tuple:
        return self.complement + self.directions

    def _check(self, z):
        if len(z) != self.n:
            raise DimensionMismatch(f"vector of length {len(z)} in R^{self.n}")

    def coords(self, z):
        z = vec(z)
        self._check(z)
        return tuple(dot(z, u) / dot(u, u) for u in self.basis)

    def project(self, z):
        z = vec(z)
        self._check(z)
        return tuple(dot(z, u) / dot(u, u) for u in self.complement)

    def from_coords(self, w):
        out = [ZERO] * self.n
        for wi, u in zip(w, self.basis):
            if wi:
                out = [a + wi * x for a, x in zip(out, u)]
        return tuple(out)

    def transform_row(self, a):
        """Row of the same inequality written in transformed coordinates."""
        a = vec(a)
        self._check(a)
        return tuple(dot(a, u) for u in self.basis)

    def transform_h(self, P: HPolytope) -> HPolytope:
        if P.dim != self.n:
            raise DimensionMismatch(f"polytope in R^{P.dim}, directions in R^{self.n}")
        return HPolytope(
            tuple(self.transform_row(a) for a in P.A),
            P.b,
            tuple(self.transform_row(e) for e in P.eq_A),
            P.eq_b,
            dim=self.n,
        )


def cube(n: int, r=1) -> HPolytope:
    """The cube ``[-r, r]^n``."""
    A, b = [], []
    for i in range(n):
        for s in (1, -1):
            row = [0] * n
            row[i] = s
            A.append(row)
            b.append(r)
    return HPolytope(A, b)


# -- canonical forms -------------------------------------------------------


def normalize_row(a, b):
    """Scale ``a.z <= b`` to primitive integer coefficients (rhs included)."""
    ints = primitive(tuple(a) + (b,))
    return tuple(Fraction(x) for x in ints[:-1]), Fraction(ints[-1])


def _clarkson(rows, z0):
    """Indices of the irredundant rows, given a strictly interior point ``z0``.

    Each LP only sees the rows already known to be irredundant.  When row i
    is violated at that LP's optimum, a ray from ``z0`` to the optimum leaves
    P through a facet; a uniquely first-hit row is irredundant and joins the
    known set.  Ties fall back to the plain redundancy test.
    """
    A = [a for a, _ in rows]
    b = [bi for _, bi in rows]
    known: list[int] = []
    for i in range(len(rows)):
        while i not in known:
            res = lp.solve_lp([A[j] for j in known] + [A[i]], [b[j] for j in known] + [b[i] + 1], A[i])
            if res.value <= b[i]:
                break
            d = tuple(x - y for x, y in zip(res.point, z0))
            best, hit = None, []
            for j in range(len(rows)):
                if j in known:
                    continue
                rate = dot(A[j], d)
                if rate > 0:
                    t = (b[j] - dot(A[j], z0)) / rate
                    if best is None or t < best:
                        best, hit = t, [j]
                    elif t == best:
                        hit.append(j)
            if len(hit) == 1:
                known.append(hit[0])
                continue
            others = [j for j in range(len(rows)) if j != i]
            res = lp.solve_lp([A[j] for j in others], [b[j] for j in others], A[i])
            if not isinstance(res, lp.LpOptimal) or res.value > b[i]:
                known.append(i)
            break
    return sorted(known)


def remove_redundant(P: HPolytope) -> HPolytope:
    """Drop redundant inequalities (duplicates: first occurrence wins)."""
    rows = []
    seen = set()
    for a, bi in zip(P.A, P.b):
        key = normalize_row(a, bi)
        if key not in seen:
            seen.add(key)
            rows.append(key)
    if not P.eq_A and len(rows) > 1:
        res = lp.max_min_slack([r[0] for r in rows], [r[1] for r in rows], cap=1)
        if isinstance(res, lp.LpOptimal) and res.value > 0:
            keep = _clarkson(rows, res.point[:-1])
            return HPolytope([rows[i][0] for i in keep], [rows[i][1] for i in keep], dim=P.dim)
    i = 0
    while i < len(rows):
        cur = HPolytope([r[0] for r in rows], [r[1] for r in rows], P.eq_A, P.eq_b, P.dim)
        if len(rows) > 1 and lp.is_redundant(cur, i):
            rows.pop(i)
        else:
            i += 1
    return HPolytope([r[0] for r in rows], [r[1] for r in rows], P.eq_A, P.eq_b, P.dim)


def sorted_h(P: HPolytope) -> HPolytope:
    rows = sorted({normalize_row(a, bi) for a, bi in zip(P.A, P.b)})
    return HPolytope([r[0] for r in rows], [r[1] for r in rows], dim=P.dim)


def canonical_h(P: HPolytope) -> HPolytope:
    """Irredundant, primitive-integer, lexicographically sorted description.

    Two full-dimensional H-polytopes are the same set iff their canonical
    forms are equal.
    """
    if P.eq_A or (P.dim > 0 and not lp.is_full_dimensional(P)):
        raise NotFullDimensional("canonical_h needs a full-dimensional polytope")
    return sorted_h(remove_redundant(P))


def in_convex_hull(p, points) -> bool:
    """Whether ``p`` is a convex combination of ``points`` (one LP)."""
    p = vec(p)
    pts = [vec(q) for q in points]
    if not pts:
        return False
    N, d = len(pts), len(p)
    E = [tuple(q[i] for q in pts) for i in range(d)]
    E.append((Fraction(1),) * N)
    f = list(p) + [Fraction(1)]
    A = [tuple(Fraction(-1) if j == i else ZERO for j in range(N)) for i in range(N)]
    res = lp.solve_lp(A, [ZERO] * N, (0,) * N, E, f)
    return isinstance(res, lp.LpOptimal)


def canonical_v(Q: VPolytope) -> VPolytope:
    """Exactly the vertices of conv(points), sorted lexicographically."""
    pts = sorted(set(Q.points))
    if len(pts) <= 2:
        return VPolytope(pts, Q.dim)
    keep = [p for i, p in enumerate(pts) if not in_convex_hull(p, pts[:i] + pts[i + 1:])]
    return VPolytope(keep, Q.dim)


def recenter(P: HPolytope):
    """Translate ``P`` so the origin is interior and rescale rows to rhs 1.

    Returns ``(P', t)`` with ``P' = {z' : A' z' <= 1}`` and ``P = P' + t``.
    """
    if P.eq_A:
        raise NotFullDimensional("equality rows present; eliminate them first")
    if not lp.is_bounded(P.A, P.b, n=P.dim):
        raise Unbounded("recenter needs a bounded polytope")
    t = lp.interior_point(P)
    rows = []
    for a, bi in zip(P.A, P.b):
        s = bi - dot(a, t)
        rows.append(tuple(x / s for x in a))
    return HPolytope(rows, [Fraction(1)] * len(rows), dim=P.dim), t


@dataclass(frozen=True)
class AffineMap:
    """``w -> offset + matrix . w``."""

    matrix: tuple
    offset: tuple

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(vec(r) for r in self.matrix))
        object.__setattr__(self, "offset", vec(self.offset))
        if len(self.matrix) != len(self.offset):
            raise DimensionMismatch("matrix rows and offset length differ")

    def __call__(self, w):
        w = vec(w)
        return tuple(o + dot(row, w) for row, o in zip(self.matrix, self.offset))

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), (0,) * n)
