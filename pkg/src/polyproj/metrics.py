"""Run metrics (LP calls, facets discovered, FM row counts).

Collectors nest: every active collector sees every event.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field

_active: ContextVar[tuple] = ContextVar("polyproj_metrics", default=())


@dataclass
class Metrics:
    lp_calls: int = 0
    facets_discovered: int = 0
    max_intermediate_rows: int = 0
    fm_steps: list = field(default_factory=list)
    lp_delays: list = field(default_factory=list)

    def as_dict(self):
        return {
            "lp_calls": self.lp_calls,
            "facets_discovered": self.facets_discovered,
            "max_intermediate_rows": self.max_intermediate_rows,
            "max_lp_delay": max(self.lp_delays, default=0),
        }


@contextmanager
def collect():
    m = Metrics()
    token = _active.set(_active.get() + (m,))
    try:
        yield m
    finally:
        _active.reset(token)


def count_lp(n: int = 1):
    for m in _active.get():
        m.lp_calls += n


def record(**kw):
    for m in _active.get():
        for k, v in kw.items():
            if k == "max_intermediate_rows":
                m.max_intermediate_rows = max(m.max_intermediate_rows, v)
            elif k == "fm_step":
                m.fm_steps.append(v)
            elif k == "facet":
                m.facets_discovered += v
            elif k == "lp_delay":
                m.lp_delays.append(v)
            else:
                raise KeyError(k)
