"""Fourier-Motzkin elimination with redundancy removal after every step."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import BadIndex, Empty, InconsistentEqualities, IntermediateBlowup
from .exactmath import dot, param_solution
from .metrics import record
from .polytope import AffineMap, DirectionSet, HPolytope, canonical_h

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StepStats:
    """Row counts for one single-variable elimination."""

    involved: int  # rows with a nonzero coefficient on the variable
    combined: int  # freshly combined rows, before pruning
    passed: int  # rows with zero coefficient
    kept: int  # rows after redundancy removal

    @property
    def bound(self) -> int:
        return self.involved * self.involved // 4

    @property
    def pre_pruning(self) -> int:
        return self.combined + self.passed


def _combine(P: HPolytope, j: int):
    if not 0 <= j < P.dim:
        raise BadIndex(f"variable index {j} outside 0..{P.dim - 1}")
    if P.eq_A:
        raise ValueError("eliminate equality rows first")
    pos, neg, rows = [], [], []
    for a, b in zip(P.A, P.b):
        if a[j] > 0:
            pos.append((a, b))
        elif a[j] < 0:
            neg.append((a, b))
        else:
            rows.append((a[:j] + a[j + 1:], b))
    passed = len(rows)
    for ap, bp in pos:
        for aq, bq in neg:
            s, t = -aq[j], ap[j]
            a = tuple(s * x + t * y for x, y in zip(ap, aq))
            rows.append((a[:j] + a[j + 1:], s * bp + t * bq))
    combined = len(rows) - passed
    assert combined <= (len(pos) + len(neg)) ** 2 // 4
    keep = []
    for a, b in rows:
        if any(a):
            keep.append((a, b))
        elif b < 0:
            raise Empty("elimination produced 0 <= negative; polytope is empty")
    raw = HPolytope([a for a, _ in keep], [b for _, b in keep], dim=P.dim - 1)
    return raw, len(pos) + len(neg), combined, passed


def eliminate_one(P: HPolytope, j: int, stats: list | None = None) -> HPolytope:
    """Shadow of ``P`` along coordinate ``j``, canonicalised."""
    raw, involved, combined, passed = _combine(P, j)
    out = canonical_h(raw) if raw.A else raw
    st = StepStats(involved, combined, passed, out.m)
    record(fm_step=st, max_intermediate_rows=st.pre_pruning)
    if stats is not None:
        stats.append(st)
    return out


def eliminate_equalities(P: HPolytope):
    """Remove equality rows by substitution.

    Returns ``(P', embed)`` where ``P'`` has no equality rows and lives in
    the free coordinates of the equality system (leading coordinates are
    kept free when possible), and ``embed`` maps points of ``P'`` back.
    """
    if not P.eq_A:
        return P, AffineMap.identity(P.dim)
    par = param_solution(P.eq_A, P.eq_b, P.dim, last_pivots=True)
    if par is None:
        raise InconsistentEqualities("equality rows have no common solution")
    z0, K, _ = par
    A, b = [], []
    for a, bi in zip(P.A, P.b):
        row = tuple(dot(a, k) for k in K)
        rhs = bi - dot(a, z0)
        if any(row):
            A.append(row)
            b.append(rhs)
        elif rhs < 0:
            raise Empty("an inequality is violated on the whole affine hull")
    M = tuple(tuple(kv[i] for kv in K) for i in range(P.dim))
    return HPolytope(A, b, dim=len(K)), AffineMap(M, z0)


def project_fm(
    P: HPolytope,
    G: DirectionSet,
    soft_cap: int | None = None,
    hard_cap: int | None = None,
    stats: list | None = None,
) -> HPolytope:
    """Canonical H-description of the projection, by incremental FM.

    The polytope is rewritten in the coordinates (complement; directions)
    and the direction coordinates are eliminated one at a time.  ``soft_cap``
    logs a warning when an intermediate step exceeds that many rows before
    pruning; ``hard_cap`` raises :class:`IntermediateBlowup` instead.
    """
    Q = canonical_h(G.transform_h(P))
    for _ in range(G.k):
        step = []
        Q = eliminate_one(Q, G.d, step)
        rows = step[0].pre_pruning
        if hard_cap is not None and rows > hard_cap:
            raise IntermediateBlowup(f"{rows} intermediate rows exceed cap {hard_cap}")
        if soft_cap is not None and rows > soft_cap:
            log.warning("FM intermediate system has %d rows (cap %d)", rows, soft_cap)
        if stats is not None:
            stats.extend(step)
    return Q
