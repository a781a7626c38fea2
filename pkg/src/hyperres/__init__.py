"""Exact resolvability toolkit for connected Sperner hypergraphs: metric
and partition dimension, twin-class lower bounds, closed forms for named
families, and the primal/middle/dual transforms."""

from .core import (
    FamilyDescriptor,
    Hypergraph,
    StructureReport,
    TwinClassPartition,
    analyze_structure,
    build_hypergraph,
    classify_family,
    is_connected,
    is_linear,
    is_sperner,
    twin_classes,
    vertex_adjacency,
)
from .errors import (
    CapExceeded,
    Disconnected,
    EmptyEdge,
    EmptyFamily,
    EmptyFile,
    EmptySet,
    HypergraphError,
    HypothesisNotMet,
    InvalidSpec,
    NotAPartition,
    NotSperner,
    SpernerViolation,
    VertexOutOfRange,
)
from .families import GeneratorSpec, generate, predicted_dim, predicted_pd
from .hgformat import format_hypergraph, parse_hypergraph
from .metric import (
    DistanceMatrix,
    distance_matrix,
    distance_to_set,
    eccentricity_and_diameter,
    representation,
)
from .partition import (
    PartitionCertificate,
    is_resolving_partition,
    partition_dimension,
    pd_lower_bound,
)
from .resolving import (
    ResolvingSetCertificate,
    count_minimum_bases,
    dim_lower_bound,
    is_resolving_set,
    metric_dimension,
)
from .transforms import Multigraph, dual, middle_graph, primal_graph
from .verify import VerifyReport, VerifyRow, reference_instances, run_verification

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Disconnected",
    "DistanceMatrix",
    "EmptyEdge",
    "EmptyFamily",
    "EmptyFile",
    "EmptySet",
    "FamilyDescriptor",
    "GeneratorSpec",
    "Hypergraph",
    "HypergraphError",
    "HypothesisNotMet",
    "InvalidSpec",
    "Multigraph",
    "NotAPartition",
    "NotSperner",
    "PartitionCertificate",
    "ResolvingSetCertificate",
    "SpernerViolation",
    "StructureReport",
    "TwinClassPartition",
    "VerifyReport",
    "VerifyRow",
    "VertexOutOfRange",
    "analyze_structure",
    "build_hypergraph",
    "classify_family",
    "count_minimum_bases",
    "dim_lower_bound",
    "distance_matrix",
    "distance_to_set",
    "dual",
    "eccentricity_and_diameter",
    "format_hypergraph",
    "generate",
    "is_connected",
    "is_linear",
    "is_resolving_partition",
    "is_resolving_set",
    "is_sperner",
    "metric_dimension",
    "middle_graph",
    "parse_hypergraph",
    "partition_dimension",
    "pd_lower_bound",
    "predicted_dim",
    "predicted_pd",
    "primal_graph",
    "reference_instances",
    "representation",
    "run_verification",
    "twin_classes",
    "vertex_adjacency",
]
