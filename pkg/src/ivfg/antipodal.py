"""Antipodal interval-valued fuzzy graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import IvfGraph, VertexId, edge_key, require_valid
from .metrics import DistancePair, diameter, distance_table


@dataclass(frozen=True)
class AntipodalPair:
    u: VertexId
    v: VertexId
    neighbors: bool  # True: weight copied from G; False: endpoint minimum

    @property
    def clause(self) -> str:
        return "neighbor" if self.neighbors else "non-neighbor"


@dataclass(frozen=True)
class AntipodalResult:
    graph: IvfGraph
    diameter_used: DistancePair
    antipodal_pairs: tuple[AntipodalPair, ...]


def antipodal_graph(g: IvfGraph, cap: int | None = None) -> AntipodalResult:
    """Build A(G).

    The vertex intervals are copied.  A pair becomes an edge exactly when its
    distance equals the diameter in *both* components; it keeps its G weight
    if the endpoints are adjacent in G and otherwise gets the componentwise
    minimum of the endpoint intervals.
    """
    require_valid(g)
    table = distance_table(g, cap)
    diam = diameter(g, cap, table=table)
    edges = {}
    pairs = []
    for u, v in itertools.combinations(g.vertex_ids(), 2):
        if table[u, v] != diam:
            continue
        w = g.edge(u, v)
        if w is None:
            edges[edge_key(u, v)] = g.vertex(u).meet(g.vertex(v))
        else:
            edges[edge_key(u, v)] = w
        pairs.append(AntipodalPair(u, v, w is not None))
    return AntipodalResult(IvfGraph(g.vertices, edges), diam, tuple(pairs))


def is_spanning_subgraph_of(a: IvfGraph, g: IvfGraph) -> bool:
    """Whether ``a`` spans ``g``: identical vertex set and vertex intervals.

    Edges are deliberately not compared, since A(G) may join non-neighbours
    of G.
    """
    return a.vertices == g.vertices
