"""Exception hierarchy shared by every ivfg module."""

from __future__ import annotations


class IvfgError(Exception):
    """Base class for all errors raised by ivfg."""


class InvalidGraph(IvfgError):
    """Raised when an operation requires a valid IVFG and gets something else."""

    def __init__(self, report):
        self.report = list(report)
        lines = "; ".join(str(v) for v in self.report)
        super().__init__(f"invalid interval-valued fuzzy graph: {lines}")


class BadParams(IvfgError, ValueError):
    pass


class NotAPath(IvfgError, ValueError):
    pass


class TooLarge(IvfgError):
    def __init__(self, n_vertices: int, cap: int):
        self.n_vertices = n_vertices
        self.cap = cap
        super().__init__(f"graph has {n_vertices} vertices, exceeding the cap of {cap}")


class Disconnected(IvfgError):
    pass


class DegenerateGraph(IvfgError):
    """The graph has too few vertices for the requested quantity."""
