from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyproj import ddoracle, lp
from polyproj.errors import BadIndex, InconsistentEqualities, IntermediateBlowup
from polyproj.exactmath import vec
from polyproj.fm import eliminate_equalities, eliminate_one, project_fm
from polyproj.metrics import collect
from polyproj.polytope import DirectionSet, HPolytope, canonical_h, cube
from polyproj.vproj import project_v

from strategies import bounded_h, vectors

F = Fraction
HEXAGON = HPolytope(
    [(-3, -1), (-3, 1), (0, -1), (0, 1), (3, -1), (3, 1)], [2, 2, 1, 1, 2, 2]
)
TRIANGLE = HPolytope([(-1, 0), (0, -1), (1, 1)], [0, 0, 1])


def test_eliminate_one_examples():
    assert eliminate_one(cube(3), 2) == canonical_h(cube(2))
    assert eliminate_one(HPolytope([(1, 1), (0, -1)], [1, 0]), 1) == HPolytope([(1,)], [1])
    assert eliminate_one(TRIANGLE, 1) == HPolytope([(-1,), (1,)], [0, 1])
    with pytest.raises(BadIndex):
        eliminate_one(cube(2), 2)


def test_eliminate_equalities_examples():
    P = HPolytope([(-1, 0), (0, -1)], [0, 0], [(1, 1)], [1])
    R, embed = eliminate_equalities(P)
    assert R.dim == 1
    assert canonical_h(R) == HPolytope([(-1,), (1,)], [0, 1])
    assert embed((F(1, 3),)) == (F(1, 3), F(2, 3))
    C = cube(2)
    R, embed = eliminate_equalities(C)
    assert R == C and embed((1, 2)) == (1, 2)
    with pytest.raises(InconsistentEqualities):
        eliminate_equalities(HPolytope([(1,)], [5], [(1,), (1,)], [0, 1]))


def test_project_fm_examples():
    assert project_fm(cube(3), DirectionSet.make([(0, 0, 1)], 3)) == canonical_h(cube(2))
    G = DirectionSet.make([(1, 1, 1)], 3)
    assert project_fm(cube(3), G) == HEXAGON
    assert project_fm(TRIANGLE, DirectionSet.make([], 2)) == canonical_h(TRIANGLE)


def test_hexagon_matches_oracle():
    G = DirectionSet.make([(1, 1, 1)], 3)
    assert ddoracle.v_to_h(project_v(ddoracle.h_to_v(cube(3)), G)) == HEXAGON


def test_caps():
    G = DirectionSet.make([(1, 1, 1)], 3)
    with pytest.raises(IntermediateBlowup):
        project_fm(cube(3), G, hard_cap=3)
    assert project_fm(cube(3), G, soft_cap=3) == HEXAGON


def test_metrics_recorded():
    stats = []
    with collect() as m:
        project_fm(cube(3), DirectionSet.make([(1, 1, 1)], 3), stats=stats)
    assert len(stats) == 1 and m.fm_steps == stats
    assert stats[0].involved == 6 and stats[0].combined == 9
    assert m.max_intermediate_rows == 9


@given(bounded_h(), st.integers(0, 2))
def test_blowup_bound(P, j):
    j = j % P.dim
    stats = []
    eliminate_one(P, j, stats)
    assert stats[0].combined <= stats[0].bound


@given(bounded_h(n=3), st.data())
def test_sampled_exactness(P, data):
    j = data.draw(st.integers(0, 2))
    R = eliminate_one(P, j)
    for _ in range(4):
        p = data.draw(vectors(2))
        # lift exists iff the fixed coordinates leave a feasible j-th coordinate
        E = [tuple(F(int(i == c)) for i in range(3)) for c in range(3) if c != j]
        lifted = lp.feasible_point(P.A, P.b, E, p, n=3) is not None
        assert R.contains(p) == lifted


@given(bounded_h(n=3, extra=2), st.data())
def test_equality_elimination_membership(P, data):
    e = data.draw(vectors(3, st.integers(-2, 2)).filter(any))
    Q = HPolytope(P.A, P.b, [e], [0])
    R, embed = eliminate_equalities(Q)
    for _ in range(4):
        w = data.draw(vectors(R.dim))
        assert R.contains(w) == Q.contains(embed(w))
