"""Community structure of affiliation networks with attitudinal attributes."""

from .analysis import (
    MembershipTable,
    MixingReport,
    SegregationSummary,
    membership_table,
    mixing_count,
    partition_nmi,
    segregation_summary,
)
from .build import (
    AttributeCatalog,
    BuiltNetwork,
    IncidenceRecord,
    build_graph,
    is_actor_attribute_bipartite,
)
from .graph import VertexKind, WeightedGraph
from .modularity import (
    NEW_COMMUNITY,
    ModularityScore,
    Partition,
    delta_modularity_move,
    merge_delta,
    modularity,
)
from .optimize import (
    AnnealParams,
    DetectionResult,
    OptimizerConfig,
    anneal,
    brute_force,
    detect,
    greedy,
)
from .synth import SurveyDataset, SynthBlock, SynthConfig, generate_synthetic

__version__ = "0.1.0"

__all__ = [
    "AnnealParams",
    "AttributeCatalog",
    "BuiltNetwork",
    "DetectionResult",
    "IncidenceRecord",
    "MembershipTable",
    "MixingReport",
    "ModularityScore",
    "NEW_COMMUNITY",
    "OptimizerConfig",
    "Partition",
    "SegregationSummary",
    "SurveyDataset",
    "SynthBlock",
    "SynthConfig",
    "VertexKind",
    "WeightedGraph",
    "anneal",
    "brute_force",
    "build_graph",
    "delta_modularity_move",
    "detect",
    "generate_synthetic",
    "greedy",
    "is_actor_attribute_bipartite",
    "membership_table",
    "merge_delta",
    "mixing_count",
    "modularity",
    "partition_nmi",
    "segregation_summary",
]
