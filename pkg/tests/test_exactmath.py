from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyproj.errors import DependentDirections, DimensionMismatch, NotOrthogonal, ZeroVector
from polyproj.exactmath import (
    dot,
    fmt_rat,
    gram_schmidt,
    kernel,
    matvec,
    orth_complement_basis,
    primitive,
    rank,
    rat,
    solve_linear,
)

from strategies import matrices, nonzero, rationals, vectors

F = Fraction


def test_solve_identity():
    sol = solve_linear([[1, 0], [0, 1]], [3, 5])
    assert sol.point == (3, 5)
    assert sol.kernel == ()


def test_solve_one_equation():
    sol = solve_linear([[1, 1]], [1])
    assert sol.point[0] + sol.point[1] == 1
    assert len(sol.kernel) == 1
    k = sol.kernel[0]
    assert k[0] + k[1] == 0 and any(k)


def test_solve_inconsistent():
    assert solve_linear([[1, 0], [1, 0]], [1, 2]) is None


def test_solve_length_mismatch():
    with pytest.raises(ValueError):
        solve_linear([[1, 0]], [1, 2])


def test_complement_of_axis():
    comp = orth_complement_basis([(0, 0, 1)], 3)
    assert set(comp) == {(1, 0, 0), (0, 1, 0)}


def test_complement_of_diagonal():
    comp = orth_complement_basis([(1, 1, 1)], 3)
    assert len(comp) == 2
    assert all(dot(c, (1, 1, 1)) == 0 for c in comp)
    assert dot(comp[0], comp[1]) == 0
    assert rank(list(comp) + [(1, 1, 1)]) == 3


def test_complement_errors():
    with pytest.raises(DependentDirections):
        orth_complement_basis([(1, 0, 0), (2, 0, 0)], 3)
    with pytest.raises(NotOrthogonal):
        orth_complement_basis([(1, 0, 0), (1, 1, 0)], 3)
    with pytest.raises(DimensionMismatch):
        orth_complement_basis([(1, 0)], 3)


def test_primitive_examples():
    assert primitive((F(1, 2), F(1, 3))) == (3, 2)
    assert primitive((-2, -4)) == (-1, -2)
    with pytest.raises(ZeroVector):
        primitive((0, 0))


def test_rat_parsing():
    assert rat("0.25") == F(1, 4)
    assert rat("-3/6") == F(-1, 2)
    assert rat("7") == 7
    assert fmt_rat(F(6, 3)) == "2"
    assert fmt_rat(F(-1, 2)) == "-1/2"


@given(rationals, rationals)
def test_field_exactness(a, b):
    assert (a + b) - b == a
    if a:
        assert a * (1 / a) == 1
    c = a * b
    assert c.denominator > 0
    from math import gcd
    assert gcd(c.numerator, c.denominator) == 1


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_solve_substitution(rows, cols, data):
    M = data.draw(matrices(rows, cols))
    z = data.draw(vectors(cols))
    rhs = matvec(M, z)
    sol = solve_linear(M, rhs)
    assert sol is not None
    assert matvec(M, sol.point) == rhs
    assert len(sol.kernel) == cols - rank(M)
    for k in sol.kernel:
        assert all(x == 0 for x in matvec(M, k))
    coeffs = data.draw(vectors(len(sol.kernel)))
    w = list(sol.point)
    for c, k in zip(coeffs, sol.kernel):
        w = [a + c * b for a, b in zip(w, k)]
    assert matvec(M, w) == rhs


@given(st.integers(1, 3), st.integers(2, 5), st.data())
def test_complement_orthogonality(k, n, data):
    raw = data.draw(matrices(min(k, n), n, st.integers(-6, 6)))
    if rank(raw) < len(raw):
        with pytest.raises(DependentDirections):
            orth_complement_basis(raw, n)
        return
    dirs = gram_schmidt(raw)
    comp = orth_complement_basis(dirs, n)
    assert len(comp) == n - len(dirs)
    both = list(comp) + list(dirs)
    for i in range(len(both)):
        for j in range(i + 1, len(both)):
            assert dot(both[i], both[j]) == 0
    assert rank(both) == n


@given(vectors(4, nonzero), nonzero)
def test_primitive_scaling(v, s):
    p = primitive(v)
    assert primitive(tuple(s * x for x in v)) == (p if s > 0 else tuple(-x for x in p))
    from math import gcd
    g = 0
    for x in p:
        g = gcd(g, x)
    assert g == 1


def test_kernel_rank_nullity():
    M = [[1, 2, 3], [2, 4, 6]]
    K = kernel(M, 3)
    assert len(K) == 2
    assert all(dot(M[0], k) == 0 for k in K)
