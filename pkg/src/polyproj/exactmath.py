"""Exact rational scalars, vectors and matrices.

Scalars are :class:`fractions.Fraction`; vectors and matrices are plain
tuples of them.  Nothing in this module ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple, Sequence

from .errors import DependentDirections, DimensionMismatch, NotOrthogonal, ZeroVector

Rat = Fraction
RatVec = tuple  # tuple[Fraction, ...]
RatMat = tuple  # tuple[RatVec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(x) -> Fraction:
    """Convert ``x`` to an exact rational.

    Strings may be ``"p/q"``, ``"p"`` or a decimal literal such as
    ``"0.25"``; decimals are converted exactly.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def fmt_rat(q) -> str:
    return str(rat(q))


def vec(xs) -> RatVec:
    return tuple(rat(x) for x in xs)


def mat(rows) -> RatMat:
    rows = tuple(vec(r) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def vadd(u, v) -> RatVec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> RatVec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(s, v) -> RatVec:
    return tuple(s * a for a in v)


def unit(n: int, i: int) -> RatVec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def matvec(M, v) -> RatVec:
    return tuple(dot(row, v) for row in M)


def transpose(M, ncols: int | None = None) -> RatMat:
    if not M:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*M))


def matmul(M, N) -> RatMat:
    Nt = transpose(N)
    return tuple(tuple(dot(row, col) for col in Nt) for row in M)


def denominator_lcm(xs) -> int:
    return lcm(1, *(x.denominator for x in xs))


def integer_row(row) -> tuple[int, ...]:
    """Scale ``row`` (Fractions or ints) by the positive lcm of its denominators."""
    L = denominator_lcm(row)
    return tuple(x.numerator * (L // x.denominator) for x in row)


def primitive(v) -> tuple[int, ...]:
    """Unique primitive integer vector parallel to ``v`` with the same orientation."""
    ints = integer_row(vec(v))
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector(f"zero vector {tuple(v)!r} has no primitive form")
    return tuple(x // g for x in ints)


def is_zero(v) -> bool:
    return all(x == 0 for x in v)


# -- Gaussian elimination ----------------------------------------------------


def _rref(rows: list[list[Fraction]], ncols: int, col_order: Sequence[int]):
    """In-place reduced row echelon form restricted to ``col_order``.

    Returns the list of (row, col) pivots.  Pivot rows are chosen as the
    first row (in current order) with a nonzero entry.
    """
    pivots = []
    r = 0
    for c in col_order:
        if r == len(rows):
            break
        sel = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        if inv != 1:
            rows[r] = pr = [x * inv for x in pr]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                ri = rows[i]
                rows[i] = [a - f * b for a, b in zip(ri, pr)]
        pivots.append((r, c))
        r += 1
    return pivots


def rank(M) -> int:
    M = [list(vec(r)) for r in M]
    if not M:
        return 0
    return len(_rref(M, len(M[0]), range(len(M[0]))))


class AffineSolution(NamedTuple):
    """``point + span(kernel)`` is the full solution set of ``M z = rhs``."""

    point: RatVec
    kernel: RatMat


def param_solution(M, rhs, ncols: int, last_pivots: bool = False):
    """Solve ``M z = rhs`` and parametrise the solutions by the free coordinates.

    Returns ``(point, basis, free_cols)`` where each basis vector has a 1 in
    its own free coordinate and 0 in the other free coordinates, or ``None``
    if the system is inconsistent.  With ``last_pivots`` the elimination
    prefers pivots in the trailing columns so that leading coordinates stay
    free.
    """
    rows = [list(vec(r)) + [rat(b)] for r, b in zip(M, rhs)]
    order = range(ncols - 1, -1, -1) if last_pivots else range(ncols)
    pivots = _rref(rows, ncols, order)
    for row in rows[len(pivots):]:
        if row[ncols] != 0:
            return None
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(ncols) if c not in pivot_cols]
    point = [ZERO] * ncols
    for r, c in pivots:
        point[c] = rows[r][ncols]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, c in pivots:
            v[c] = -rows[r][f]
        basis.append(tuple(v))
    return tuple(point), tuple(basis), tuple(free)


def solve_linear(M, rhs, ncols: int | None = None) -> AffineSolution | None:
    """Exact solution set of ``M z = rhs``; ``None`` when inconsistent.

    Kernel vectors are returned in primitive integer form.
    """
    if len(M) != len(rhs):
        raise ValueError("row count of M and length of rhs differ")
    if ncols is None:
        if not M:
            raise ValueError("ncols required for an empty system")
        ncols = len(M[0])
    res = param_solution(M, rhs, ncols)
    if res is None:
        return None
    point, basis, _ = res
    kernel = tuple(tuple(Fraction(x) for x in primitive(v)) for v in basis)
    return AffineSolution(point, kernel)


def kernel(M, ncols: int) -> RatMat:
    return solve_linear(M, [ZERO] * len(M), ncols).kernel


# -- orthogonal bases --------------------------------------------------------


def gram_schmidt(vectors, start=()) -> list[RatVec]:
    """Orthogonalise ``vectors`` against ``start`` and each other, unnormalised.

    Vectors that become zero are dropped; survivors are scaled to primitive
    integer form.
    """
    basis = [vec(v) for v in start]
    norms = [dot(b, b) for b in basis]
    out = []
    for v in vectors:
        w = vec(v)
        for b, nb in zip(basis, norms):
            coef = dot(w, b) / nb
            if coef:
                w = tuple(x - coef * y for x, y in zip(w, b))
        if is_zero(w):
            continue
        w = tuple(Fraction(x) for x in primitive(w))
        basis.append(w)
        norms.append(dot(w, w))
        out.append(w)
    return out


def check_directions(directions, n: int) -> tuple[RatVec, ...]:
    dirs = tuple(vec(g) for g in directions)
    for g in dirs:
        if len(g) != n:
            raise DimensionMismatch(f"direction {g} is not in R^{n}")
    if rank(dirs) < len(dirs):
        raise DependentDirections("projection directions are linearly dependent")
    for i in range(len(dirs)):
        for j in range(i + 1, len(dirs)):
            if dot(dirs[i], dirs[j]) != 0:
                raise NotOrthogonal(f"directions {i} and {j} are not orthogonal")
    return dirs


def orth_complement_basis(directions, n: int) -> RatMat:
    """``n - k`` pairwise orthogonal primitive vectors orthogonal to ``directions``.

    Built by orthogonalising e_1, ..., e_n in order against the directions,
    so the complement of coordinate axes is made of coordinate axes.
    """
    dirs = check_directions(directions, n)
    comp = gram_schmidt((unit(n, i) for i in range(n)), start=dirs)
    assert len(comp) == n - len(dirs)
    return tuple(comp)
