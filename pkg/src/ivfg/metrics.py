"""Paths, lengths, distances, eccentricity, radius and diameter.

``delta_mu`` is a minimum over paths of non-negative weights, so a plain
shortest-path search is exact.  ``delta_nu`` is a maximum over *simple*
paths, i.e. a longest-path problem; it is solved exactly by dynamic
programming over vertex subsets, which is exponential in the number of
vertices and therefore guarded by a vertex cap.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import IvfGraph, VertexId
from .errors import DegenerateGraph, Disconnected, NotAPath, TooLarge
from .scalar import ZERO, Scalar

DEFAULT_MAX_VERTICES = 12
CAP_ENV = "IVFG_MAX_VERTICES"


def max_vertices() -> int:
    """Enumeration cap, overridable through ``IVFG_MAX_VERTICES``."""
    raw = os.environ.get(CAP_ENV)
    if raw:
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
        if cap < 1:
            raise ValueError(f"{CAP_ENV} must be positive, got {cap}")
        return cap
    return DEFAULT_MAX_VERTICES


def _check_cap(g: IvfGraph, cap: int | None) -> None:
    cap = max_vertices() if cap is None else cap
    if len(g) > cap:
        raise TooLarge(len(g), cap)


@dataclass(frozen=True)
class LengthPair:
    l_mu: Scalar
    l_nu: Scalar

    def __iter__(self):
        return iter((self.l_mu, self.l_nu))


@dataclass(frozen=True)
class DistancePair:
    d_mu: Scalar
    d_nu: Scalar

    def __iter__(self):
        return iter((self.d_mu, self.d_nu))

    def __str__(self) -> str:
        return f"({self.d_mu}, {self.d_nu})"


@dataclass(frozen=True)
class EccentricityPair:
    e_mu: Scalar
    e_nu: Scalar

    def __iter__(self):
        return iter((self.e_mu, self.e_nu))

    def __str__(self) -> str:
        return f"({self.e_mu}, {self.e_nu})"


def path_length(g: IvfGraph, path: Sequence[VertexId]) -> LengthPair:
    if not path:
        raise NotAPath("a path needs at least one vertex")
    if len(set(path)) != len(path):
        raise NotAPath(f"vertex repeated in {'-'.join(path)}")
    for v in path:
        if v not in g:
            raise NotAPath(f"unknown vertex {v}")
    l_mu = l_nu = ZERO
    for u, v in zip(path, path[1:]):
        w = g.edge(u, v)
        if w is None:
            raise NotAPath(f"{u}{v} is not an edge")
        l_mu += w.mu
        l_nu += w.nu
    return LengthPair(l_mu, l_nu)


def _simple_paths_from(g: IvfGraph, source: VertexId) -> Iterator[list[VertexId]]:
    # every simple path starting at source, in lexicographic DFS order
    adj = {v: sorted(g.neighbors(v)) for v in g.vertex_ids()}
    path = [source]
    on_path = {source}
    stack = [iter(adj[source])]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if nxt in on_path:
            continue
        path.append(nxt)
        on_path.add(nxt)
        yield path
        stack.append(iter(adj[nxt]))


def enumerate_simple_paths(
    g: IvfGraph, u: VertexId, v: VertexId, cap: int | None = None
) -> list[list[VertexId]]:
    """All simple ``u``-``v`` paths, lexicographic by vertex sequence."""
    _check_cap(g, cap)
    if u == v:
        raise ValueError("endpoints must differ")
    for x in (u, v):
        if x not in g:
            raise KeyError(x)
    found = []
    for p in _simple_paths_from(g, u):
        if p[-1] == v:
            found.append(list(p))
    return found


def _components(g: IvfGraph) -> list[set[VertexId]]:
    seen: set[VertexId] = set()
    comps = []
    for start in g.vertex_ids():
        if start in seen:
            continue
        comp = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    todo.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: IvfGraph) -> bool:
    return len(_components(g)) <= 1


def strength_of_connectedness(
    g: IvfGraph, u: VertexId, v: VertexId, cap: int | None = None
) -> tuple[Scalar, Scalar]:
    """Componentwise max over simple paths of the weakest edge on each path."""
    best_mu = best_nu = ZERO
    for p in enumerate_simple_paths(g, u, v, cap):
        ws = [g.weight(a, b) for a, b in zip(p, p[1:])]
        best_mu = max(best_mu, min(w.mu for w in ws))
        best_nu = max(best_nu, min(w.nu for w in ws))
    return best_mu, best_nu


def shortest_mu(g: IvfGraph, source: VertexId) -> dict[VertexId, Scalar]:
    """Dijkstra over mu-weights; unreachable vertices are absent."""
    dist = {source: 0}
    heap = [(0, source)]
    done = set()
    while heap:
        d, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        for y, w in g.neighbors(x).items():
            nd = d + w.mu.units
            if y not in dist or nd < dist[y]:
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return {x: Scalar(d) for x, d in dist.items()}


def longest_nu(g: IvfGraph, source: VertexId, cap: int | None = None) -> dict[VertexId, Scalar]:
    """Largest nu-length of a simple path from ``source`` to each reachable vertex.

    Held-Karp style table keyed by (visited set, endpoint); only states that
    are actually reachable are stored.
    """
    _check_cap(g, cap)
    ids = g.vertex_ids()
    bit = {v: 1 << i for i, v in enumerate(ids)}
    adj = {v: [(y, w.nu.units) for y, w in g.neighbors(v).items()] for v in ids}

    best = {source: 0}
    layer = {(bit[source], source): 0}
    while layer:
        nxt: dict[tuple[int, VertexId], int] = {}
        for (mask, end), length in layer.items():
            for y, w in adj[end]:
                if mask & bit[y]:
                    continue
                state = (mask | bit[y], y)
                cand = length + w
                if cand > nxt.get(state, -1):
                    nxt[state] = cand
        for (_, end), length in nxt.items():
            if length > best.get(end, -1):
                best[end] = length
        layer = nxt
    return {x: Scalar(d) for x, d in best.items()}


def distance_by_enumeration(
    g: IvfGraph, u: VertexId, v: VertexId, cap: int | None = None
) -> DistancePair:
    """Min mu-length and max nu-length over an explicit list of simple paths."""
    paths = enumerate_simple_paths(g, u, v, cap)
    if not paths:
        raise Disconnected(f"no path between {u} and {v}")
    lengths = [path_length(g, p) for p in paths]
    return DistancePair(min(l.l_mu for l in lengths), max(l.l_nu for l in lengths))


def distance(g: IvfGraph, u: VertexId, v: VertexId, cap: int | None = None) -> DistancePair:
    if u == v:
        raise ValueError("distance is defined between distinct vertices")
    for x in (u, v):
        if x not in g:
            raise KeyError(x)
    _check_cap(g, cap)
    d_mu = shortest_mu(g, u)
    if v not in d_mu:
        raise Disconnected(f"no path between {u} and {v}")
    return DistancePair(d_mu[v], longest_nu(g, u, cap)[v])


def distance_table(g: IvfGraph, cap: int | None = None) -> dict[tuple[VertexId, VertexId], DistancePair]:
    """Distances for every ordered pair of distinct vertices.

    Raises Disconnected unless every pair is joined by a path.
    """
    _check_cap(g, cap)
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    ids = g.vertex_ids()
    table = {}
    for i, u in enumerate(ids):
        d_mu = shortest_mu(g, u)
        d_nu = longest_nu(g, u, cap)
        for v in ids[i + 1:]:
            pair = DistancePair(d_mu[v], d_nu[v])
            table[u, v] = table[v, u] = pair
    return table


def _need_pairs(g: IvfGraph) -> None:
    if len(g) < 2:
        raise DegenerateGraph("eccentricity needs at least two vertices")


def eccentricities(g: IvfGraph, cap: int | None = None, table=None) -> dict[VertexId, EccentricityPair]:
    _need_pairs(g)
    table = distance_table(g, cap) if table is None else table
    ids = g.vertex_ids()
    out = {}
    for v in ids:
        ds = [table[v, u] for u in ids if u != v]
        out[v] = EccentricityPair(max(d.d_mu for d in ds), max(d.d_nu for d in ds))
    return out


def eccentricity(g: IvfGraph, v: VertexId, cap: int | None = None) -> EccentricityPair:
    if v not in g:
        raise KeyError(v)
    return eccentricities(g, cap)[v]


def radius(g: IvfGraph, cap: int | None = None, table=None) -> DistancePair:
    ecc = eccentricities(g, cap, table).values()
    return DistancePair(min(e.e_mu for e in ecc), min(e.e_nu for e in ecc))


def diameter(g: IvfGraph, cap: int | None = None, table=None) -> DistancePair:
    ecc = eccentricities(g, cap, table).values()
    return DistancePair(max(e.e_mu for e in ecc), max(e.e_nu for e in ecc))
