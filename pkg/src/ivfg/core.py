"""Interval-valued fuzzy graph data model, validation and basic operations."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BadParams, InvalidGraph
from .scalar import ONE, ZERO, Scalar, ScalarLike

VertexId = str
EdgeKey = frozenset


def edge_key(u: VertexId, v: VertexId) -> EdgeKey:
    return frozenset((u, v))


def edge_ends(key: EdgeKey) -> tuple[VertexId, VertexId]:
    """Endpoints of an edge key in lexicographic order."""
    ends = sorted(key)
    if len(ends) == 1:
        return ends[0], ends[0]
    return ends[0], ends[1]


@dataclass(frozen=True, order=True)
class Interval:
    """Membership interval ``[mu, nu]`` of a vertex or an edge."""

    mu: Scalar
    nu: Scalar

    @classmethod
    def of(cls, mu: ScalarLike, nu: ScalarLike) -> "Interval":
        return cls(Scalar.of(mu), Scalar.of(nu))

    def meet(self, other: "Interval") -> "Interval":
        """Componentwise minimum."""
        return Interval(min(self.mu, other.mu), min(self.nu, other.nu))

    def within(self, other: "Interval") -> bool:
        """Componentwise ``<=``; the dataclass ordering is lexicographic."""
        return self.mu <= other.mu and self.nu <= other.nu

    def __str__(self) -> str:
        return f"[{self.mu}, {self.nu}]"


NO_EDGE = Interval(ZERO, ZERO)


def _as_interval(value) -> Interval:
    if isinstance(value, Interval):
        return value
    mu, nu = value
    return Interval.of(mu, nu)


class IvfGraph:
    """Undirected interval-valued fuzzy graph.

    Construction does not enforce the IVFG inequalities so that arbitrary
    candidates can be inspected with :func:`validate`.  Instances are
    immutable; operations always return new graphs.

    >>> g = IvfGraph({"a": ("0.3", "0.6"), "b": ("0.4", "0.7")}, {("a", "b"): ("0.2", "0.5")})
    >>> g.edge("b", "a")
    Interval(mu=Scalar('0.2000'), nu=Scalar('0.5000'))
    """

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices: Mapping | Iterable = (), edges: Mapping | Iterable = ()):
        if isinstance(vertices, Mapping):
            vertices = vertices.items()
        if isinstance(edges, Mapping):
            edges = edges.items()
        self._vertices: dict[VertexId, Interval] = {
            str(v): _as_interval(iv) for v, iv in vertices
        }
        self._edges: dict[EdgeKey, Interval] = {}
        for pair, iv in edges:
            key = pair if isinstance(pair, frozenset) else edge_key(*pair)
            self._edges[key] = _as_interval(iv)
        adj: dict[VertexId, dict[VertexId, Interval]] = {v: {} for v in self._vertices}
        for key, iv in self._edges.items():
            u, v = edge_ends(key)
            if u in adj and v in adj and u != v:
                adj[u][v] = iv
                adj[v][u] = iv
        self._adj = adj

    @property
    def vertices(self) -> Mapping[VertexId, Interval]:
        return dict(self._vertices)

    @property
    def edges(self) -> Mapping[EdgeKey, Interval]:
        return dict(self._edges)

    def vertex_ids(self) -> list[VertexId]:
        return sorted(self._vertices)

    def vertex(self, v: VertexId) -> Interval:
        return self._vertices[v]

    def edge(self, u: VertexId, v: VertexId) -> Interval | None:
        return self._edges.get(edge_key(u, v))

    def weight(self, u: VertexId, v: VertexId) -> Interval:
        """Edge interval, or ``[0, 0]`` for a non-adjacent pair."""
        return self._edges.get(edge_key(u, v), NO_EDGE)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return edge_key(u, v) in self._edges

    def neighbors(self, v: VertexId) -> dict[VertexId, Interval]:
        return dict(self._adj[v])

    def degree(self, v: VertexId) -> int:
        return len(self._adj[v])

    def sorted_edges(self) -> list[tuple[VertexId, VertexId, Interval]]:
        rows = [(*edge_ends(k), iv) for k, iv in self._edges.items()]
        rows.sort(key=lambda r: (r[0], r[1]))
        return rows

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._vertices

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self.vertex_ids())

    def __eq__(self, other) -> bool:
        if not isinstance(other, IvfGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash((frozenset(self._vertices.items()), frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"IvfGraph(<{len(self._vertices)} vertices, {len(self._edges)} edges>)"

    def subgraph(self, keep: Iterable[VertexId]) -> "IvfGraph":
        """Induced subgraph on ``keep`` with unchanged intervals."""
        keep = set(keep)
        return IvfGraph(
            {v: iv for v, iv in self._vertices.items() if v in keep},
            {k: iv for k, iv in self._edges.items() if k <= keep},
        )

    def relabel(self, mapping: Mapping[VertexId, VertexId]) -> "IvfGraph":
        return IvfGraph(
            {mapping[v]: iv for v, iv in self._vertices.items()},
            {frozenset(mapping[x] for x in k): iv for k, iv in self._edges.items()},
        )


@dataclass(frozen=True)
class Violation:
    """One failed constraint, with the vertex or edge it concerns."""

    code: str
    where: str
    message: str

    def __str__(self) -> str:
        return self.message


def validate(g: IvfGraph) -> list[Violation]:
    """Every violated IVFG constraint of ``g``; empty iff ``g`` is valid."""
    report: list[Violation] = []
    for v in g.vertex_ids():
        iv = g.vertex(v)
        if not v or any(ch.isspace() for ch in v):
            report.append(Violation("bad-id", v, f"vertex id {v!r} is empty or has whitespace"))
        if iv.mu > ONE or iv.nu > ONE:
            report.append(Violation("range", v, f"interval {iv} at {v} leaves [0, 1]"))
        if iv.mu > iv.nu:
            report.append(Violation("order", v, f"mu > nu at {v} ({iv.mu} > {iv.nu})"))

    for key, iv in sorted(g.edges.items(), key=lambda kv: edge_ends(kv[0])):
        x, y = edge_ends(key)
        name = f"{x}{y}" if len(x) == 1 and len(y) == 1 else f"{x}-{y}"
        if x == y:
            report.append(Violation("self-loop", name, f"self-loop at {x}"))
            continue
        missing = [e for e in (x, y) if e not in g]
        if missing:
            report.append(Violation("endpoint", name, f"edge {name} uses undeclared vertex {missing[0]}"))
            continue
        if iv.mu > iv.nu:
            report.append(Violation("edge-order", name, f"mu > nu on edge {name} ({iv.mu} > {iv.nu})"))
        if iv.nu == ZERO:
            report.append(Violation("zero-edge", name, f"edge {name} has nu = 0"))
        ax, ay = g.vertex(x), g.vertex(y)
        bound_mu, bound_nu = min(ax.mu, ay.mu), min(ax.nu, ay.nu)
        if iv.mu > bound_mu:
            report.append(Violation(
                "mu-bound", name,
                f"mu_B({name})={iv.mu} > min({ax.mu},{ay.mu})={bound_mu}",
            ))
        if iv.nu > bound_nu:
            report.append(Violation(
                "nu-bound", name,
                f"nu_B({name})={iv.nu} > min({ax.nu},{ay.nu})={bound_nu}",
            ))
    return report


def require_valid(g: IvfGraph) -> None:
    report = validate(g)
    if report:
        raise InvalidGraph(report)


# Violations complement() tolerates: its own output can have them, because
# the two components are complemented independently.
_COMPLEMENT_TOLERATES = {"edge-order", "zero-edge"}


def complement(g: IvfGraph) -> IvfGraph:
    """Same vertices; each pair weighted by endpoint minimum minus its edge weight.

    Only pairs whose complement is exactly ``[0, 0]`` are left out, which
    makes the operation an involution.  The two components are complemented
    independently, so a valid input can yield an edge with ``mu > nu`` (edge
    ``[0, 0.4]`` between ``[0.5, 0.5]`` vertices becomes ``[0.5, 0.1]``) or
    with ``nu = 0``; such output fails :func:`validate` but is still accepted
    here, so ``complement(complement(g)) == g`` for every valid ``g``.
    """
    report = [v for v in validate(g) if v.code not in _COMPLEMENT_TOLERATES]
    if report:
        raise InvalidGraph(report)
    ids = g.vertex_ids()
    edges = {}
    for u, v in itertools.combinations(ids, 2):
        bound = g.vertex(u).meet(g.vertex(v))
        w = g.weight(u, v)
        c = Interval(bound.mu - w.mu, bound.nu - w.nu)
        if c != NO_EDGE:
            edges[edge_key(u, v)] = c
    return IvfGraph(g.vertices, edges)


def is_complete(g: IvfGraph) -> bool:
    require_valid(g)
    for u, v in itertools.combinations(g.vertex_ids(), 2):
        w = g.edge(u, v)
        if w is None or w != g.vertex(u).meet(g.vertex(v)):
            return False
    return True


def is_subgraph(h: IvfGraph, g: IvfGraph) -> bool:
    require_valid(h)
    require_valid(g)
    gv, ge = g.vertices, g.edges
    if any(gv.get(v) != iv for v, iv in h.vertices.items()):
        return False
    return all(ge.get(k) == iv for k, iv in h.edges.items())


class GraphKind(str, Enum):
    COMPLETE_CONSTANT = "complete-constant"
    EVEN_CYCLE_ALTERNATING = "even-cycle-alternating"
    PATH = "path"


def generate(
    kind: GraphKind | str,
    n: int,
    vertex,
    edges: Sequence = (),
) -> IvfGraph:
    """Build a graph from one of the parametrised families.

    ``vertex`` is the interval given to every vertex ``v1 .. vn``.
    ``complete-constant`` ignores ``edges`` and weights every pair with
    ``vertex``; ``even-cycle-alternating`` needs exactly two edge intervals
    used alternately starting from ``v1v2``; ``path`` cycles through the
    given edge intervals along ``v1 - v2 - ... - vn``.
    """
    kind = GraphKind(kind)
    if n < 1:
        raise BadParams(f"n must be >= 1, got {n}")
    vertex = _as_interval(vertex)
    edges = [_as_interval(e) for e in edges]
    ids = [f"v{i}" for i in range(1, n + 1)]

    if kind is GraphKind.COMPLETE_CONSTANT:
        if n > 1 and not vertex.nu:
            raise BadParams("complete-constant needs nu > 0 so that edges exist")
        pairs = {edge_key(u, v): vertex for u, v in itertools.combinations(ids, 2)}
    elif kind is GraphKind.EVEN_CYCLE_ALTERNATING:
        if n < 4 or n % 2:
            raise BadParams(f"even-cycle-alternating needs even n >= 4, got {n}")
        if len(edges) != 2:
            raise BadParams("even-cycle-alternating needs exactly two edge intervals")
        pairs = {edge_key(ids[i], ids[(i + 1) % n]): edges[i % 2] for i in range(n)}
    else:
        if n > 1 and not edges:
            raise BadParams("path needs at least one edge interval")
        pairs = {edge_key(ids[i], ids[i + 1]): edges[i % len(edges)] for i in range(n - 1)}

    g = IvfGraph({v: vertex for v in ids}, pairs)
    report = validate(g)
    if report:
        raise BadParams("; ".join(str(v) for v in report))
    return g


def random_graph(
    rng: random.Random,
    n: int,
    density: float = 0.5,
    connected: bool = True,
    step: int = 1000,
) -> IvfGraph:
    """Random valid IVFG on ``v1 .. vn``.

    Memberships are multiples of ``step`` ten-thousandths (0.1 by default),
    which keeps ties, and hence antipodal pairs, reasonably common.  With
    ``connected`` a random spanning tree is laid down first.
    """
    levels = 10_000 // step

    def draw_vertex() -> Interval:
        a, b = sorted((rng.randint(1, levels), rng.randint(1, levels)))
        return Interval(Scalar(a * step), Scalar(b * step))

    def draw_edge(bound: Interval) -> Interval:
        nu = rng.randint(1, bound.nu.units // step)
        mu = rng.randint(0, min(nu, bound.mu.units // step))
        return Interval(Scalar(mu * step), Scalar(nu * step))

    ids = [f"v{i}" for i in range(1, n + 1)]
    verts = {v: draw_vertex() for v in ids}
    pairs: set[EdgeKey] = set()
    if connected:
        order = ids[:]
        rng.shuffle(order)
        for i in range(1, n):
            pairs.add(edge_key(order[i], order[rng.randrange(i)]))
    for u, v in itertools.combinations(ids, 2):
        if rng.random() < density:
            pairs.add(edge_key(u, v))
    edges = {}
    for key in sorted(pairs, key=edge_ends):
        u, v = edge_ends(key)
        edges[key] = draw_edge(verts[u].meet(verts[v]))
    return IvfGraph(verts, edges)


def complete_graph(vertices: Mapping) -> IvfGraph:
    """Complete IVFG over the given vertex intervals (edges at the endpoint minimum)."""
    verts = {v: _as_interval(iv) for v, iv in vertices.items()}
    return IvfGraph(
        verts,
        {edge_key(u, v): verts[u].meet(verts[v]) for u, v in itertools.combinations(sorted(verts), 2)},
    )
