"""Exact rational linear programming.

The solver is a primal simplex with Bland's rule over a fraction-free
integer tableau: rows are scaled to integers once, and every pivot keeps the
tableau integral by exact division with the previous pivot (the same trick
lrs uses).  Variables ``z`` are free; they are pivoted into the basis first
and never leave it.  Equality constraints are removed up front by exact
Gaussian elimination.

Besides ``solve_lp`` the module provides the LP-derived predicates used
throughout the package: interior points, redundancy, implicit equalities,
affine dimension and lexicographic vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .errors import Empty, Infeasible, NotFullDimensional, Unbounded
from .exactmath import (
    ZERO,
    denominator_lcm,
    dot,
    integer_row,
    param_solution,
    rank,
    solve_linear,
    vec,
)
from .metrics import count_lp


@dataclass(frozen=True)
class LpOptimal:
    point: tuple
    value: Fraction
    dual: tuple  # one nonnegative multiplier per inequality row
    unique: bool = False
    _eq: tuple = field(default=(), repr=False, compare=False)

    status = "optimal"

    @property
    def dual_eq(self) -> tuple:
        """Free multipliers ``mu`` with ``A^T y + E^T mu = c``."""
        if not self._eq:
            return ()
        A, E, c = self._eq
        resid = list(c)
        for y, a in zip(self.dual, A):
            if y:
                resid = [r - y * x for r, x in zip(resid, a)]
        Et = tuple(tuple(e[j] for e in E) for j in range(len(c)))
        return solve_linear(Et, resid, len(E)).point


@dataclass(frozen=True)
class LpUnbounded:
    ray: tuple

    status = "unbounded"


@dataclass(frozen=True)
class LpInfeasible:
    status = "infeasible"


LpOutcome = LpOptimal | LpUnbounded | LpInfeasible
INFEASIBLE = LpInfeasible()


def _lcm_scale(row):
    """Integer multiple of ``row`` and the (positive integer) factor."""
    L = denominator_lcm(row)
    return tuple(x.numerator * (L // x.denominator) for x in row), L


def _solve(A, b, c, E=(), f=()):
    """max c.z s.t. A z <= b, E z = f, z free.  Inputs are tuples of Fractions.

    Equality rows carry no slack column; free variables are pivoted in on
    them first, so they never take part in a ratio test.
    """
    n = len(c)
    keep = []
    for i, a in enumerate(A):
        if any(a):
            keep.append(i)
        elif b[i] < 0:
            return INFEASIBLE
    m = len(keep)
    width = n + m + 1
    T = []
    scale = []
    for r, i in enumerate(keep):
        ints, L = _lcm_scale(A[i] + (b[i],))
        row = [0] * width
        row[:n] = ints[:n]
        row[n + r] = 1
        row[-1] = ints[n]
        T.append(row)
        scale.append(L)
    for e, fe in zip(E, f):
        ints = integer_row(e + (fe,))
        T.append(list(ints[:n]) + [0] * m + [ints[n]])
    c_int, Lc = _lcm_scale(c)
    # basis: n + r for slack rows, -1 for equality rows not yet used
    basis = [n + r for r in range(m)] + [-1] * len(E)
    D = 1

    # free variables enter the basis for good, through equality rows first
    fixed = []
    for j in range(n):
        r = next((r for r in range(m, len(T)) if basis[r] < 0 and T[r][j] != 0), -1)
        if r < 0:
            r = next((r for r in range(m) if basis[r] >= n and T[r][j] != 0), -1)
        if r < 0:
            fixed.append(j)
            continue
        D = kernels.pivot(T, r, j, D)
        basis[r] = j
    for r in range(len(T) - 1, m - 1, -1):
        if basis[r] < 0:
            if T[r][-1] != 0:
                return INFEASIBLE
            del T[r], basis[r]
    R = len(T)
    rows = [r for r in range(R) if basis[r] >= n]
    cols = list(range(n, n + m))

    # phase 1 with a single artificial column (Chvatal)
    if any(T[r][-1] < 0 for r in rows):
        x0 = n + m
        for r in range(R):
            T[r].insert(x0, -D if basis[r] >= n else 0)
        obj = [0] * (width + 1)
        obj[x0] = D
        T.append(obj)
        r = min(rows, key=lambda i: (T[i][-1], basis[i]))
        D = kernels.pivot(T, r, x0, D)
        basis[r] = x0
        cols.append(x0)
        while True:
            s = kernels.entering(T[R], cols)
            if s < 0:
                break
            r = kernels.ratio_test(T, s, rows, basis)
            D = kernels.pivot(T, r, s, D)
            basis[r] = s
        if T[R][-1] < 0:
            return INFEASIBLE
        cols.pop()
        if x0 in basis:
            r = basis.index(x0)
            s = next((j for j in cols if T[r][j] != 0), -1)
            if s >= 0:
                D = kernels.pivot(T, r, s, D)
                basis[r] = s
        T.pop()
        width += 1

    obj = [0] * width
    for j in range(n):
        obj[j] = -D * c_int[j]
    for r in range(R):
        coef = c_int[basis[r]] if basis[r] < n else 0
        if coef:
            obj = [x + coef * y for x, y in zip(obj, T[r])]
    T.append(obj)

    for j in fixed:
        if obj[j] != 0:
            sign = 1 if obj[j] < 0 else -1
            ray = [ZERO] * n
            ray[j] = Fraction(sign)
            for r in range(R):
                if basis[r] < n:
                    ray[basis[r]] = Fraction(-sign * T[r][j], D)
            return LpUnbounded(tuple(ray))

    while True:
        s = kernels.entering(T[R], cols)
        if s < 0:
            break
        r = kernels.ratio_test(T, s, rows, basis)
        if r < 0:
            ray = [ZERO] * n
            for i in range(R):
                if basis[i] < n:
                    ray[basis[i]] = Fraction(-T[i][s], D)
            return LpUnbounded(tuple(ray))
        D = kernels.pivot(T, r, s, D)
        basis[r] = s

    point = [ZERO] * n
    for r in range(R):
        if basis[r] < n:
            point[basis[r]] = Fraction(T[r][-1], D)
    obj = T[R]
    dual = [ZERO] * len(A)
    for r, i in enumerate(keep):
        if obj[n + r]:
            dual[i] = Fraction(obj[n + r] * scale[r], D * Lc)
    unique = not fixed and all(obj[j] > 0 for j in cols if j not in basis)
    eq = (A, E, c) if E else ()
    return LpOptimal(tuple(point), dot(c, point), tuple(dual), unique, eq)


def solve_lp(A, b, c, E=(), f=()) -> LpOutcome:
    """Maximise ``c.z`` subject to ``A z <= b`` and ``E z = f`` exactly."""
    count_lp()
    c = vec(c)
    A = tuple(vec(a) for a in A)
    E = tuple(vec(e) for e in E)
    return _solve(A, vec(b), c, E, vec(f))


def _rows(P):
    return P.A, P.b, P.eq_A, P.eq_b


def maximize(P, c) -> LpOutcome:
    """Exact optimum of ``c.z`` over the H-polytope ``P``."""
    A, b, E, f = _rows(P)
    if len(vec(c)) != P.dim:
        raise ValueError("objective dimension differs from ambient dimension")
    return solve_lp(A, b, c, E, f)


def feasible_point(A, b, E=(), f=(), n=None):
    n = n if n is not None else (len(A[0]) if A else len(E[0]))
    res = solve_lp(A, b, (0,) * n, E, f)
    return res.point if isinstance(res, LpOptimal) else None


# -- derived predicates ------------------------------------------------------


def max_min_slack(A, b, E=(), f=(), weights=None, cap=None):
    """Solve max t s.t. ``a_i z + w_i t <= b_i``; returns the LP outcome over (z, t).

    ``weights`` defaults to 1 for every row.  ``cap`` adds ``t <= cap``.
    """
    n = len(A[0]) if A else len(E[0])
    w = weights if weights is not None else [1] * len(A)
    rows = [tuple(a) + (Fraction(wi),) for a, wi in zip(A, w)]
    rhs = list(b)
    if cap is not None:
        rows.append((ZERO,) * n + (Fraction(1),))
        rhs.append(Fraction(cap))
    Ez = [tuple(e) + (ZERO,) for e in E]
    return solve_lp(rows, rhs, (0,) * n + (1,), Ez, f)


def interior_point(P):
    """A point strictly inside every inequality of ``P``.

    Maximises the radius of an infinity-norm ball inside ``P`` (each row's
    slack weighted by the 1-norm of its normal).
    """
    if P.eq_A:
        raise ValueError("interior_point expects a description without equalities")
    weights = [sum(abs(x) for x in a) for a in P.A]
    res = max_min_slack(P.A, P.b, weights=weights)
    if isinstance(res, LpInfeasible):
        raise Empty("polytope is empty")
    if isinstance(res, LpUnbounded):
        raise Unbounded("slack program unbounded; polytope is unbounded")
    if res.value < 0:
        raise Empty("polytope is empty")
    if res.value == 0:
        raise NotFullDimensional("polytope has no interior point")
    return res.point[:-1]


def is_full_dimensional(P) -> bool:
    if P.eq_A:
        return False
    res = max_min_slack(P.A, P.b, cap=1)
    return isinstance(res, LpOptimal) and res.value > 0


def is_redundant(P, i: int) -> bool:
    """True iff dropping row ``i`` leaves the feasible set unchanged."""
    A, b, E, f = _rows(P)
    others = [j for j in range(len(A)) if j != i]
    res = solve_lp([A[j] for j in others], [b[j] for j in others], A[i], E, f)
    if isinstance(res, LpUnbounded):
        return False
    if isinstance(res, LpInfeasible):
        return True
    return res.value <= b[i]


def implicit_equalities(A, b, E=(), f=(), candidates=None, with_point=False):
    """Rows of ``A z <= b`` that are tight at every feasible point.

    Returns ``None`` if the system is infeasible.  With ``with_point`` the
    result is ``(rows, z)`` with ``z`` some feasible point.  Each round solves one
    max-min-slack LP over the undecided rows; rows carrying a positive dual
    multiplier at a zero optimum are forced tight, rows with positive slack
    at the optimum are not.
    """
    n = len(A[0]) if A else len(E[0])
    undecided = set(range(len(A)) if candidates is None else candidates)
    implicit = set()
    while True:
        order = sorted(undecided)
        rows, rhs = [], []
        for i, (a, bi) in enumerate(zip(A, b)):
            rows.append(tuple(a) + ((Fraction(1),) if i in undecided else (ZERO,)))
            rhs.append(bi)
        rows.append((ZERO,) * n + (Fraction(1),))
        rhs.append(Fraction(1))
        Ez = [tuple(e) + (ZERO,) for e in E]
        res = solve_lp(rows, rhs, (0,) * n + (1,), Ez, f)
        if isinstance(res, LpInfeasible):
            return None
        z = res.point[:-1]
        if not order or res.value > 0:
            return (implicit, z) if with_point else implicit
        found = False
        for i in order:
            if res.dual[i] > 0:
                implicit.add(i)
                undecided.discard(i)
                found = True
            elif dot(A[i], z) < b[i]:
                undecided.discard(i)
        assert found, "zero optimum without a positive multiplier"
        if not undecided:
            return (implicit, z) if with_point else implicit


def affine_dim_rows(A, b, E=(), f=(), n=None) -> int:
    """Affine dimension of ``{A z <= b, E z = f}``; -1 if empty."""
    n = n if n is not None else (len(A[0]) if A else len(E[0]))
    imp = implicit_equalities(A, b, E, f) if A else set()
    if imp is None:
        return -1
    if not A and E and param_solution(E, f, n) is None:
        return -1
    eqs = list(E) + [A[i] for i in sorted(imp)]
    return n - rank(eqs) if eqs else n


def affine_dim(P, active=()) -> int:
    """Affine dimension of the face of ``P`` where the ``active`` rows are tight."""
    active = sorted(set(active))
    E = list(P.eq_A) + [P.A[i] for i in active]
    f = list(P.eq_b) + [P.b[i] for i in active]
    return affine_dim_rows(P.A, P.b, E, f, P.dim)


def lex_optimal_vertex(P, c, tiebreak=(), extra_eq=()):
    """Vertex of ``P`` maximising ``c``, ties broken by each tiebreak vector in turn."""
    A, b, E, f = _rows(P)
    E, f = list(E), list(f)
    for e, v in extra_eq:
        E.append(vec(e))
        f.append(Fraction(v))
    res = None
    for obj in (c, *tiebreak):
        obj = vec(obj)
        res = solve_lp(A, b, obj, E, f)
        if isinstance(res, LpInfeasible):
            raise Infeasible("no feasible point")
        if isinstance(res, LpUnbounded):
            raise Unbounded("objective unbounded")
        if res.unique:
            return res.point
        E.append(obj)
        f.append(res.value)
    return res.point


def is_bounded(A, b, E=(), f=(), n=None) -> bool:
    """Whether a nonempty ``{A z <= b, E z = f}`` is bounded.

    Bounded iff the recession cone ``{A d <= 0, E d = 0}`` is ``{0}``,
    i.e. maximising each signed coordinate over the cone (cut off at 1)
    returns zero.
    """
    n = n if n is not None else (len(A[0]) if A else len(E[0]))
    cone = [tuple(a) for a in A]
    zeros = [ZERO] * len(A)
    E0 = [tuple(e) for e in E]
    f0 = [ZERO] * len(E)
    for j in range(n):
        for sgn in (1, -1):
            obj = [ZERO] * n
            obj[j] = Fraction(sgn)
            box = cone + [tuple(obj)]
            res = solve_lp(box, zeros + [Fraction(1)], obj, E0, f0)
            if isinstance(res, LpUnbounded) or (isinstance(res, LpOptimal) and res.value > 0):
                return False
    return True
