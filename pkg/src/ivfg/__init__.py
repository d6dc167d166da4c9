"""Interval-valued fuzzy graphs: distances, antipodal graphs, status and morphisms."""

from .antipodal import AntipodalPair, AntipodalResult, antipodal_graph, is_spanning_subgraph_of
from .core import (
    GraphKind,
    Interval,
    IvfGraph,
    Violation,
    complement,
    complete_graph,
    edge_key,
    generate,
    is_complete,
    is_subgraph,
    random_graph,
    validate,
)
from .errors import (
    BadParams,
    DegenerateGraph,
    Disconnected,
    InvalidGraph,
    IvfgError,
    NotAPath,
    TooLarge,
)
from .metrics import (
    DistancePair,
    EccentricityPair,
    LengthPair,
    diameter,
    distance,
    distance_by_enumeration,
    distance_table,
    eccentricity,
    enumerate_simple_paths,
    is_connected,
    path_length,
    radius,
    strength_of_connectedness,
)
from .morphism import MorphismKind, VertexMap, find_morphism, verify_map
from .scalar import Scalar
from .status import StatusPair, StatusSummary, is_self_median, status, status_summary
from .textio import dumps, loads

__version__ = "0.1.0"
