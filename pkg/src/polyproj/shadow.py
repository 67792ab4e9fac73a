"""Output-sensitive facet enumeration of a projection by ridge walking.

Everything happens in transformed coordinates ``w = (x, y)`` of a recentered
polytope ``{w : A w <= 1}``: ``x`` spans the projection space and ``y`` the
directions.  A facet ``alpha . x <= 1`` of the shadow corresponds to the
face of P cut out by the lifted hyperplane ``(alpha, 0) . w = 1``.  Walking
from a facet across each of its ridges to the neighbouring facet reaches
every facet, because the facet graph of a polytope is connected.

Each dimension claim that holds for non-degenerate directions is checked
and raises :class:`DegeneracyDetected` when it fails.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .errors import (
    DegeneracyDetected,
    DegenerateDirections,
    NotFullDimensional,
    NotSupporting,
)
from .exactmath import ONE, ZERO, dot, param_solution, rank, vec
from .metrics import collect, record
from .polytope import DirectionSet, HPolytope, normalize_row, recenter, sorted_h

DEFAULT_T = Fraction(7919, 7920)
DEFAULT_ATTEMPTS = 8


@dataclass(frozen=True)
class FaceRef:
    """A face of the recentered polytope, named by its tight rows."""

    active: tuple

    def __post_init__(self):
        object.__setattr__(self, "active", tuple(sorted(set(self.active))))


@dataclass(frozen=True)
class NormalSegment:
    """Normals ``alpha`` with ``(alpha, 0)`` in the convex hull of a face's rows.

    ``kind`` is ``"empty"``, ``"point"`` (``lo == hi``) or ``"segment"``.
    ``certificates`` holds the convex weights that produce ``lo`` and ``hi``.
    """

    kind: str
    lo: tuple | None = None
    hi: tuple | None = None
    certificates: tuple = ()


EMPTY_SEGMENT = NormalSegment("empty")


def default_rays(d: int, attempts: int = DEFAULT_ATTEMPTS):
    """Deterministic ray directions ``(1, 1/q, 1/q^2, ...)`` for a few primes q."""
    primes = (7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
    for q in primes[:attempts]:
        yield tuple(Fraction(1, q**i) for i in range(d))


class _Walker:
    """Ridge walking state over a recentered, transformed polytope."""

    def __init__(self, T: HPolytope, d: int, audit: bool = False, t0=DEFAULT_T):
        self.A = T.A
        self.m = T.m
        self.n = T.dim
        self.d = d
        self.k = self.n - d
        self.ones = (ONE,) * self.m
        self.audit = audit
        self.t0 = Fraction(t0)

    def lift(self, alpha):
        return tuple(alpha) + (ZERO,) * self.k

    # -- facets and their pre-images ---------------------------------------

    def preimage(self, alpha, check_support: bool = False) -> FaceRef:
        h = self.lift(alpha)
        if check_support:
            res = lp.solve_lp(self.A, self.ones, h)
            if not isinstance(res, lp.LpOptimal) or res.value != 1:
                raise NotSupporting(f"lifted hyperplane {alpha} . x = 1 does not support P")
        imp = lp.implicit_equalities(self.A, self.ones, [h], [ONE])
        if imp is None:
            raise NotSupporting(f"lifted hyperplane {alpha} . x = 1 misses P")
        active = tuple(sorted(imp))
        dim = self.n - rank([h] + [self.A[i] for i in active])
        if dim != self.d - 1:
            raise DegeneracyDetected(
                f"pre-image of {alpha} . x <= 1 has dimension {dim}, expected {self.d - 1}"
            )
        return FaceRef(active)

    def ridge_candidates(self, face: FaceRef) -> list[FaceRef]:
        """Facets of the face, each as its maximal tight row set."""
        S = face.active
        inside = set(S)
        par = param_solution([self.A[i] for i in S], [ONE] * len(S), self.n)
        if par is None:
            raise NotSupporting("face rows have no common solution")
        z0, K, _ = par
        groups: dict = {}
        for j in range(self.m):
            if j in inside:
                continue
            r = tuple(dot(self.A[j], kv) for kv in K)
            c = ONE - dot(self.A[j], z0)
            if any(r):
                groups.setdefault(normalize_row(r, c), []).append(j)
        keys = list(groups)
        out = []
        for gi, (r, c) in enumerate(keys):
            others = keys[:gi] + keys[gi + 1:]
            res = lp.solve_lp([o[0] for o in others], [o[1] for o in others], r)
            if isinstance(res, lp.LpOptimal) and res.value <= c:
                continue
            out.append(FaceRef(S + tuple(groups[(r, c)])))
        return out

    # -- normal regions ------------------------------------------------------

    def alpha_of(self, S, lam):
        return tuple(
            sum((l * self.A[i][j] for l, i in zip(lam, S) if l), ZERO) for j in range(self.d)
        )

    def normal_region(self, face: FaceRef) -> NormalSegment:
        S = face.active
        q = len(S)
        if q == 0:
            return EMPTY_SEGMENT
        neg = [tuple(-ONE if t == i else ZERO for t in range(q)) for i in range(q)]
        zeros = [ZERO] * q
        E = [(ONE,) * q] + [tuple(self.A[i][j] for i in S) for j in range(self.d, self.n)]
        f = [ONE] + [ZERO] * self.k
        res = lp.implicit_equalities(neg, zeros, E, f, with_point=True)
        if res is None:
            return EMPTY_SEGMENT
        imp, lam = res
        E = E + [neg[i] for i in sorted(imp)]
        f = f + [ZERO] * len(imp)
        _, K, _ = param_solution(E, f, q)
        image = [self.alpha_of(S, kv) for kv in K]
        r = rank(image) if image else 0
        if r == 0:
            alpha = self.alpha_of(S, lam)
            return NormalSegment("point", alpha, alpha, (lam, lam))
        if r >= 2:
            raise DegeneracyDetected(
                f"normal region of face {S} has dimension {r}, expected at most 1"
            )
        u = next(v for v in image if any(v))
        t = self.t0
        while True:
            c = tuple(t**i for i in range(self.d))
            if dot(c, u):
                break
            t += 1
        obj = tuple(dot(c, self.A[i][: self.d]) for i in S)
        hi = lp.solve_lp(neg, zeros, obj, E, f)
        lo = lp.solve_lp(neg, zeros, tuple(-x for x in obj), E, f)
        lo_a, hi_a = self.alpha_of(S, lo.point), self.alpha_of(S, hi.point)
        return NormalSegment("segment", lo_a, hi_a, (lo.point, hi.point))

    def check_certificate(self, S, lam, alpha):
        ok = (
            all(l >= 0 for l in lam)
            and sum(lam) == 1
            and all(
                sum((l * self.A[i][j] for l, i in zip(lam, S)), ZERO)
                == (alpha[j] if j < self.d else 0)
                for j in range(self.n)
            )
        )
        if not ok:
            raise DegeneracyDetected(f"convex-combination certificate for {alpha} failed")

    # -- seeding -------------------------------------------------------------

    def initial_facet(self, rays=None):
        rays = list(rays) if rays is not None else list(default_rays(self.d))
        for r in rays:
            r = vec(r)
            rows = [(dot(a[: self.d], r),) + a[self.d:] for a in self.A]
            res = lp.solve_lp(rows, self.ones, (ONE,) + (ZERO,) * self.k)
            if not isinstance(res, lp.LpOptimal) or res.value <= 0:
                continue
            s = res.value
            fix = [tuple(ONE if j == i else ZERO for j in range(self.n)) for i in range(self.d)]
            imp = lp.implicit_equalities(self.A, self.ones, fix, [s * x for x in r])
            if not imp:
                continue
            try:
                seg = self.normal_region(FaceRef(tuple(imp)))
            except DegeneracyDetected:
                continue
            if seg.kind != "point":
                continue
            try:
                self.preimage(seg.lo)
            except DegeneracyDetected as exc:
                raise DegenerateDirections(str(exc)) from exc
            return seg.lo
        raise DegenerateDirections(f"no ray out of {len(rays)} exited through a facet")

    # -- enumeration ---------------------------------------------------------

    def enumerate(self, rays=None) -> list:
        with collect() as local:
            alpha0 = self.initial_facet(rays)
            known = {alpha0}
            order = []
            queue = deque([alpha0])
            ridges: dict = {}
            last = 0
            while queue:
                alpha = queue.popleft()
                face = self.preimage(alpha, check_support=self.audit)
                order.append(alpha)
                record(facet=1, lp_delay=local.lp_calls - last)
                last = local.lp_calls
                for cand in self.ridge_candidates(face):
                    seg = self.normal_region(cand)
                    if seg.kind != "segment" or alpha not in (seg.lo, seg.hi):
                        raise DegeneracyDetected(
                            f"ridge {cand.active} of facet {alpha} yields {seg.kind} normals"
                        )
                    other = seg.hi if seg.lo == alpha else seg.lo
                    if self.audit:
                        self._audit_ridge(cand, seg)
                        ridges.setdefault(cand.active, set()).add(alpha)
                    if other not in known:
                        known.add(other)
                        queue.append(other)
            if self.audit:
                for active, reporters in ridges.items():
                    if len(reporters) != 2:
                        raise DegeneracyDetected(
                            f"ridge {active} reported by {len(reporters)} facets"
                        )
        return order

    def _audit_ridge(self, cand: FaceRef, seg: NormalSegment):
        dim = lp.affine_dim_rows(
            self.A, self.ones, [self.A[i] for i in cand.active], [ONE] * len(cand.active), self.n
        )
        if dim != self.d - 2:
            raise DegeneracyDetected(f"ridge {cand.active} has dimension {dim}, expected {self.d - 2}")
        for lam, alpha in zip(seg.certificates, (seg.lo, seg.hi)):
            self.check_certificate(cand.active, lam, alpha)


def _walker(P: HPolytope, G: DirectionSet, audit=False, t0=DEFAULT_T) -> _Walker:
    if any(bi != 1 for bi in P.b) or P.eq_A:
        raise ValueError("expected a recentered polytope (all right-hand sides 1)")
    return _Walker(G.transform_h(P), G.d, audit, t0)


def initial_facet(P: HPolytope, G: DirectionSet, rays=None):
    """Normal ``alpha`` of one facet ``alpha . x <= 1`` of the shadow.

    Shoots rays from the origin in the given (or default) directions until
    one leaves the shadow through the relative interior of a facet.
    """
    return _walker(P, G).initial_facet(rays)


def preimage_facets(P: HPolytope, G: DirectionSet, alpha) -> FaceRef:
    """Rows of P tight on the pre-image of the shadow facet ``alpha . x <= 1``."""
    return _walker(P, G).preimage(vec(alpha), check_support=True)


def ridge_candidates(P: HPolytope, G: DirectionSet, face: FaceRef) -> list[FaceRef]:
    return _walker(P, G).ridge_candidates(face)


def ridge_segment(P: HPolytope, G: DirectionSet, candidate: FaceRef, t0=DEFAULT_T) -> NormalSegment:
    return _walker(P, G, t0=t0).normal_region(candidate)


def enumerate_shadow_facets(
    P: HPolytope, G: DirectionSet, audit: bool = False, rays=None, t0=DEFAULT_T
) -> HPolytope:
    """Canonical H-description of the projection of ``P`` along ``G``.

    ``P`` must be bounded and full-dimensional; it is recentered internally.
    With ``audit`` every dimension claim and normal certificate is rechecked.
    """
    if P.eq_A:
        raise NotFullDimensional("equality rows present; eliminate them first")
    R, shift = recenter(P)
    w = _Walker(G.transform_h(R), G.d, audit, t0)
    s = G.project(shift)
    if G.d == 0:
        return HPolytope((), (), dim=0)
    if G.d == 1:
        alphas = []
        for sign in (ONE, -ONE):
            res = lp.solve_lp(w.A, w.ones, (sign,) + (ZERO,) * G.k)
            alpha = (sign / res.value,)
            w.preimage(alpha, check_support=audit)
            record(facet=1)
            alphas.append(alpha)
    else:
        alphas = w.enumerate(rays)
    b = [ONE + dot(a, s) for a in alphas]
    return sorted_h(HPolytope(alphas, b, dim=G.d))
