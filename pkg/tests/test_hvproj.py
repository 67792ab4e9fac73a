from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyproj import ddoracle
from polyproj.errors import NotFullDimensional, OracleTooLarge, Unbounded, ZeroVector
from polyproj.exactmath import dot
from polyproj.fm import project_fm
from polyproj.gadgets import lift_to_simplex, sample_directions, simplex_h
from polyproj.hvproj import LiftedHyperplane, enumerate_hv, next_vertex, proper_intersection
from polyproj.polytope import DirectionSet, HPolytope, VPolytope, canonical_h, canonical_v, cube
from polyproj.vproj import project_v

from strategies import bounded_h, point_sets

F = Fraction
C3 = cube(3)
AXIS = DirectionSet.make([(0, 0, 1)], 3)
DIAG = DirectionSet.make([(1, 1, 1)], 3)
HEXAGON = HPolytope(
    [(-3, -1), (-3, 1), (0, -1), (0, 1), (3, -1), (3, 1)], [2, 2, 1, 1, 2, 2]
)
HEX_V = ((F(-2, 3), 0), (F(-1, 3), -1), (F(-1, 3), 1), (F(1, 3), -1), (F(1, 3), 1), (F(2, 3), 0))


def test_lifted_hyperplane():
    h = LiftedHyperplane((1, 0), 1)
    assert h.lifted(2) == (1, 0, 0, 0)
    with pytest.raises(ZeroVector):
        LiftedHyperplane((0, 0), 1)


def test_proper_intersection_examples():
    assert not proper_intersection(C3, AXIS, LiftedHyperplane((1, 0), 1))
    assert proper_intersection(C3, AXIS, LiftedHyperplane((1, 0), 0))
    assert not proper_intersection(C3, AXIS, LiftedHyperplane((1, 0), 2))


def test_next_vertex_examples():
    # hull of (1,1), (1,-1), (-1,1): the facet x + y >= 0 cuts the cube
    h = LiftedHyperplane((-1, -1), 0)
    assert proper_intersection(C3, AXIS, h)
    x = next_vertex(C3, AXIS, h)
    assert x == (-1, -1)
    assert dot(h.normal_proj, x) > h.rhs


def test_next_vertex_hexagon_from_alternate_vertices():
    V = [HEX_V[0], HEX_V[3], HEX_V[4]]
    H = ddoracle.v_to_h(VPolytope(V))
    found = set()
    for a, b in zip(H.A, H.b):
        h = LiftedHyperplane(a, b)
        assert proper_intersection(C3, DIAG, h)
        x = next_vertex(C3, DIAG, h)
        assert dot(a, x) > b
        found.add(x)
    assert found == set(HEX_V) - set(V)


def test_enumerate_hv_examples():
    sq = enumerate_hv(C3, AXIS)
    assert sq.h == canonical_h(cube(2))
    assert set(sq.v.points) == set(product((1, -1), repeat=2))
    hexa = enumerate_hv(C3, DIAG)
    assert hexa.h == HEXAGON
    assert hexa.v.points == HEX_V


def test_enumerate_hv_simplex_lift():
    Q = canonical_v(VPolytope([(0, 0), (3, 0), (0, 2), (1, 1), (2, 2)]))
    D, G = lift_to_simplex(Q)
    res = enumerate_hv(simplex_h(Q), G)
    assert res.v == Q
    assert res.h == ddoracle.v_to_h(Q)


def test_enumerate_hv_errors():
    with pytest.raises(Unbounded):
        enumerate_hv(HPolytope([(1, 0, 0), (0, 1, 0), (0, 0, 1)], [1, 1, 1]), AXIS)
    flat = HPolytope(list(C3.A), list(C3.b), [(1, 1, 0)], [0])
    with pytest.raises(NotFullDimensional):
        # the shadow along e3 of a vertical square is a segment in the plane
        enumerate_hv(flat, AXIS)
    with ddoracle.oracle_limits(max_points=3):
        with pytest.raises(OracleTooLarge):
            enumerate_hv(C3, DIAG)


def test_certificate():
    cert = []
    res = enumerate_hv(C3, DIAG, certificate=cert)
    assert len(cert) == res.h.m
    assert not any(proper_intersection(C3, DIAG, h) for h in cert)


def test_pluggable_hull():
    calls = []

    def hull(V):
        calls.append(len(V.points))
        return ddoracle.v_to_h(V)

    assert enumerate_hv(C3, DIAG, hull=hull).h == HEXAGON
    # vertex count grows strictly between oracle calls
    assert calls == sorted(set(calls))


@settings(max_examples=25)
@given(bounded_h(n=3, extra=3), st.integers(0, 10**6))
def test_agreement(P, seed):
    G = sample_directions(3, 1, seed, coeff_bound=3)
    res = enumerate_hv(P, G)
    assert res.h == project_fm(P, G)
    assert res.v == project_v(ddoracle.h_to_v(P), G)
    assert all(res.h.contains(v) for v in res.v.points)
