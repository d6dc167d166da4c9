"""Homomorphism, isomorphism and co-weak isomorphism search.

All three kinds share one backtracking engine.  Vertices of the first graph
are assigned in lexicographic order and candidate images are tried in
lexicographic order, so the first complete assignment found is the
lexicographically smallest witness.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .core import NO_EDGE, Interval, IvfGraph, VertexId, Violation, require_valid
from .errors import TooLarge

DEFAULT_MAX_VERTICES = 10


class MorphismKind(str, Enum):
    HOMOMORPHISM = "homomorphism"
    ISOMORPHISM = "isomorphism"
    CO_WEAK = "co-weak"

    @classmethod
    def parse(cls, text: str) -> "MorphismKind":
        aliases = {"hom": cls.HOMOMORPHISM, "iso": cls.ISOMORPHISM}
        return aliases.get(text) or cls(text)

    @property
    def bijective(self) -> bool:
        return self is not MorphismKind.HOMOMORPHISM


@dataclass(frozen=True)
class VertexMap:
    mapping: dict[VertexId, VertexId]
    kind: MorphismKind

    def __getitem__(self, v: VertexId) -> VertexId:
        return self.mapping[v]

    def inverse(self) -> "VertexMap":
        if not self.kind.bijective:
            raise ValueError("only bijective maps have an inverse")
        return VertexMap({b: a for a, b in self.mapping.items()}, self.kind)

    def then(self, other: "VertexMap") -> "VertexMap":
        """Composition: apply ``self`` first, then ``other``."""
        return VertexMap({a: other.mapping[b] for a, b in self.mapping.items()}, self.kind)


def _vertex_ok(kind: MorphismKind, a: Interval, b: Interval) -> bool:
    if kind is MorphismKind.ISOMORPHISM:
        return a == b
    return a.within(b)


def _pair_ok(kind: MorphismKind, a: Interval, b: Interval) -> bool:
    # a, b are the weights of a pair in g1 and its image in g2 ([0,0] if absent)
    if kind is MorphismKind.HOMOMORPHISM:
        return a.within(b)
    return a == b


def verify_map(g1: IvfGraph, g2: IvfGraph, m: VertexMap) -> list[Violation]:
    """Every constraint of ``m.kind`` that ``m`` violates; empty iff it is a witness."""
    report: list[Violation] = []
    kind = m.kind
    h = m.mapping
    ids1 = g1.vertex_ids()
    if set(h) != set(ids1):
        report.append(Violation("domain", "", "map domain differs from the vertex set of the first graph"))
        return report
    stray = sorted(b for b in h.values() if b not in g2)
    if stray:
        report.append(Violation("codomain", stray[0], f"image {stray[0]} is not a vertex of the second graph"))
        return report
    if kind.bijective and (len(set(h.values())) != len(h) or len(g1) != len(g2)):
        report.append(Violation("bijection", "", "not a bijection"))

    for u in ids1:
        a, b = g1.vertex(u), g2.vertex(h[u])
        if not _vertex_ok(kind, a, b):
            rel = "=" if kind is MorphismKind.ISOMORPHISM else "<="
            report.append(Violation("vertex", u, f"vertex {u} -> {h[u]}: need {a} {rel} {b}"))

    if kind.bijective:
        pairs = [(u, v) for i, u in enumerate(ids1) for v in ids1[i + 1:]]
    else:
        pairs = [(u, v) for u, v, _ in g1.sorted_edges()]
    for u, v in pairs:
        a = g1.weight(u, v)
        b = g2.weight(h[u], h[v]) if h[u] != h[v] else NO_EDGE
        if not _pair_ok(kind, a, b):
            rel = "<=" if kind is MorphismKind.HOMOMORPHISM else "="
            report.append(Violation(
                "edge", f"{u}-{v}",
                f"pair {u}{v} -> {h[u]}{h[v]}: need {a} {rel} {b}",
            ))
    return report


def _quick_reject(g1: IvfGraph, g2: IvfGraph, kind: MorphismKind) -> bool:
    """Necessary conditions cheap enough to test before searching."""
    if not kind.bijective:
        return False
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return True
    if Counter(g1.edges.values()) != Counter(g2.edges.values()):
        return True
    if sorted(map(g1.degree, g1)) != sorted(map(g2.degree, g2)):
        return True
    if kind is MorphismKind.ISOMORPHISM:
        return Counter(g1.vertices.values()) != Counter(g2.vertices.values())
    return False


def find_morphism(
    g1: IvfGraph,
    g2: IvfGraph,
    kind: MorphismKind | str,
    cap: int = DEFAULT_MAX_VERTICES,
) -> VertexMap | None:
    """Lexicographically first map of the given kind from ``g1`` to ``g2``, or None."""
    kind = MorphismKind.parse(kind) if isinstance(kind, str) else kind
    require_valid(g1)
    require_valid(g2)
    for g in (g1, g2):
        if len(g) > cap:
            raise TooLarge(len(g), cap)
    if _quick_reject(g1, g2, kind):
        return None

    ids1, ids2 = g1.vertex_ids(), g2.vertex_ids()
    bij = kind.bijective
    candidates = {
        u: [
            x for x in ids2
            if _vertex_ok(kind, g1.vertex(u), g2.vertex(x))
            and (not bij or g1.degree(u) == g2.degree(x))
        ]
        for u in ids1
    }
    h: dict[VertexId, VertexId] = {}
    used: set[VertexId] = set()

    def consistent(u: VertexId, x: VertexId) -> bool:
        for w, y in h.items():
            a = g1.weight(u, w)
            if bij:
                if a != g2.weight(x, y):
                    return False
            elif a.nu:
                # an edge of g1 needs a dominating edge in g2
                if x == y or not a.within(g2.weight(x, y)):
                    return False
        return True

    def extend(i: int) -> bool:
        if i == len(ids1):
            return True
        u = ids1[i]
        for x in candidates[u]:
            if bij and x in used:
                continue
            if not consistent(u, x):
                continue
            h[u] = x
            if bij:
                used.add(x)
            if extend(i + 1):
                return True
            del h[u]
            used.discard(x)
        return False

    if not extend(0):
        return None
    return VertexMap(dict(h), kind)
