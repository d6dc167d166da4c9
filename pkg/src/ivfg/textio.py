"""Line-oriented text format for interval-valued fuzzy graphs.

::

    # comment
    v <id> <mu> <nu>
    e <id1> <id2> <mu> <nu>

Values are decimal literals with at most four fractional digits.  Blank
lines and ``#`` comments are ignored.  :func:`dumps` writes vertices, then
edges, both in lexicographic order, with exactly four decimals.
"""

from __future__ import annotations

from pathlib import Path

from .core import Interval, IvfGraph, edge_key, validate
from .errors import IvfgError
from .scalar import Scalar


class ParseError(IvfgError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class GraphSyntaxError(ParseError):
    pass


class DuplicateVertex(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class UnknownEndpoint(ParseError):
    pass


class ValidationFailed(ParseError):
    def __init__(self, report):
        self.report = list(report)
        super().__init__("; ".join(str(v) for v in self.report))


def _scalar(token: str, lineno: int) -> Scalar:
    try:
        return Scalar.parse(token)
    except ValueError as exc:
        raise GraphSyntaxError(str(exc), lineno) from None


def loads(text: str, check: bool = True) -> IvfGraph:
    """Parse a graph document.  With ``check`` the result must be a valid IVFG."""
    vertices: dict[str, Interval] = {}
    edges = {}
    pending = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "v":
            if len(parts) != 4:
                raise GraphSyntaxError("expected 'v <id> <mu> <nu>'", lineno)
            vid = parts[1]
            if vid in vertices:
                raise DuplicateVertex(f"vertex {vid} declared twice", lineno)
            vertices[vid] = Interval(_scalar(parts[2], lineno), _scalar(parts[3], lineno))
        elif tag == "e":
            if len(parts) != 5:
                raise GraphSyntaxError("expected 'e <id1> <id2> <mu> <nu>'", lineno)
            u, v = parts[1], parts[2]
            key = edge_key(u, v)
            if key in edges:
                raise DuplicateEdge(f"edge {u} {v} declared twice", lineno)
            edges[key] = Interval(_scalar(parts[3], lineno), _scalar(parts[4], lineno))
            pending.append((lineno, u, v))
        else:
            raise GraphSyntaxError(f"unknown record type {tag!r}", lineno)

    # vertices may be declared after the edges that use them
    for lineno, u, v in pending:
        for x in (u, v):
            if x not in vertices:
                raise UnknownEndpoint(f"edge {u} {v} uses undeclared vertex {x}", lineno)

    g = IvfGraph(vertices, edges)
    if check:
        report = validate(g)
        if report:
            raise ValidationFailed(report)
    return g


def dumps(g: IvfGraph) -> str:
    lines = [f"v {v} {iv.mu} {iv.nu}" for v, iv in sorted(g.vertices.items())]
    lines += [f"e {u} {v} {iv.mu} {iv.nu}" for u, v, iv in g.sorted_edges()]
    return "".join(line + "\n" for line in lines)


def load(path, check: bool = True) -> IvfGraph:
    return loads(Path(path).read_text(encoding="utf-8"), check=check)


def dump(g: IvfGraph, path) -> None:
    Path(path).write_text(dumps(g), encoding="utf-8")
