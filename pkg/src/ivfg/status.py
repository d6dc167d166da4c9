"""Vertex status (distance sums), median and self-median analysis."""

from __future__ import annotations

from dataclasses import dataclass

from .core import IvfGraph, VertexId
from .errors import DegenerateGraph
from .metrics import distance_table
from .scalar import Scalar


@dataclass(frozen=True)
class StatusPair:
    s_mu: Scalar
    s_nu: Scalar

    def __iter__(self):
        return iter((self.s_mu, self.s_nu))

    def __add__(self, other: "StatusPair") -> "StatusPair":
        return StatusPair(self.s_mu + other.s_mu, self.s_nu + other.s_nu)

    def __str__(self) -> str:
        return f"({self.s_mu}, {self.s_nu})"


@dataclass(frozen=True)
class StatusSummary:
    per_vertex: dict[VertexId, StatusPair]
    minimum: StatusPair
    maximum: StatusPair
    total: StatusPair
    median: frozenset[VertexId]
    mu_minimizers: frozenset[VertexId]
    nu_minimizers: frozenset[VertexId]
    self_median: bool


def _statuses(g: IvfGraph, cap: int | None) -> dict[VertexId, StatusPair]:
    if len(g) < 2:
        raise DegenerateGraph("status needs at least two vertices")
    table = distance_table(g, cap)
    ids = g.vertex_ids()
    out = {}
    for v in ids:
        ds = [table[v, u] for u in ids if u != v]
        out[v] = StatusPair(sum(d.d_mu for d in ds), sum(d.d_nu for d in ds))
    return out


def status(g: IvfGraph, v: VertexId, cap: int | None = None) -> StatusPair:
    if v not in g:
        raise KeyError(v)
    return _statuses(g, cap)[v]


def status_summary(g: IvfGraph, cap: int | None = None) -> StatusSummary:
    """Statuses of all vertices with their min/max/total and the median.

    Minimum and maximum are taken separately in each component.  The median
    is the set of vertices attaining both component minima and may be empty;
    ``mu_minimizers`` and ``nu_minimizers`` give the per-component picture.
    """
    per = _statuses(g, cap)
    values = list(per.values())
    lo = StatusPair(min(s.s_mu for s in values), min(s.s_nu for s in values))
    hi = StatusPair(max(s.s_mu for s in values), max(s.s_nu for s in values))
    total = StatusPair(sum(s.s_mu for s in values), sum(s.s_nu for s in values))
    mu_min = frozenset(v for v, s in per.items() if s.s_mu == lo.s_mu)
    nu_min = frozenset(v for v, s in per.items() if s.s_nu == lo.s_nu)
    return StatusSummary(
        per_vertex=per,
        minimum=lo,
        maximum=hi,
        total=total,
        median=mu_min & nu_min,
        mu_minimizers=mu_min,
        nu_minimizers=nu_min,
        self_median=lo == hi,
    )


def is_self_median(g: IvfGraph, cap: int | None = None) -> bool:
    return status_summary(g, cap).self_median
