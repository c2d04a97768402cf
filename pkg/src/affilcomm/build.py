"""Build the merged actor-attribute bipartite graph from incidence records.

Vertex numbering is canonical: attributes first (affiliations in catalog
order, then attitudes), then actors sorted lexicographically. Attributes
with no records are dropped and reported, so the graph never carries
isolated vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    DuplicateCatalogLabelError,
    EmptyInputError,
    KindMismatchError,
    UnknownAttributeError,
)
from .graph import VertexKind, WeightedGraph


@dataclass(frozen=True)
class IncidenceRecord:
    actor: str
    attribute: str
    kind: VertexKind  # AFFILIATION or ATTITUDE
    weight: int = 1

    def __post_init__(self):
        if self.kind == VertexKind.ACTOR:
            raise KindMismatchError("incidence records tie actors to attributes")
        if self.weight < 1:
            raise ValueError("record weight must be >= 1")


@dataclass
class AttributeCatalog:
    affiliations: list[str]
    attitudes: list[str]

    def __post_init__(self):
        seen: set[str] = set()
        for label in list(self.affiliations) + list(self.attitudes):
            if label in seen:
                raise DuplicateCatalogLabelError(f"duplicate catalog label {label!r}")
            seen.add(label)

    def kind_of(self, label: str) -> VertexKind:
        if label in self.affiliations:
            return VertexKind.AFFILIATION
        if label in self.attitudes:
            return VertexKind.ATTITUDE
        raise UnknownAttributeError(f"attribute {label!r} not in catalog")

    def labels(self) -> list[str]:
        """All attribute labels in canonical row order."""
        return list(self.affiliations) + list(self.attitudes)

    def __contains__(self, label: str) -> bool:
        return label in self.affiliations or label in self.attitudes


@dataclass
class BuiltNetwork:
    graph: WeightedGraph
    attribute_index: dict[str, int]  # label -> vertex id
    actor_index: dict[str, int]
    dropped_attributes: list[str] = field(default_factory=list)


def build_graph(
    records: Sequence[IncidenceRecord], catalog: AttributeCatalog
) -> BuiltNetwork:
    """Merge affiliation and attitude ties into one bipartite graph.

    Duplicate (actor, attribute) records accumulate weight, so the total
    edge weight m equals the sum of record weights.
    """
    if not records:
        raise EmptyInputError("no incidence records")
    for rec in records:
        if rec.attribute not in catalog:
            raise UnknownAttributeError(f"attribute {rec.attribute!r} not in catalog")
        if catalog.kind_of(rec.attribute) != rec.kind:
            raise KindMismatchError(
                f"record kind {rec.kind.value} disagrees with catalog for "
                f"{rec.attribute!r}"
            )

    used_attrs = {rec.attribute for rec in records}
    attr_labels = [a for a in catalog.labels() if a in used_attrs]
    dropped = [a for a in catalog.labels() if a not in used_attrs]
    actor_labels = sorted({rec.actor for rec in records})

    attribute_index = {a: i for i, a in enumerate(attr_labels)}
    offset = len(attr_labels)
    actor_index = {a: offset + i for i, a in enumerate(actor_labels)}

    kinds = [catalog.kind_of(a) for a in attr_labels] + [VertexKind.ACTOR] * len(
        actor_labels
    )
    g = WeightedGraph(len(kinds), kinds=kinds, labels=attr_labels + actor_labels)
    for rec in records:
        g.add_edge(actor_index[rec.actor], attribute_index[rec.attribute], rec.weight)
    return BuiltNetwork(
        graph=g,
        attribute_index=attribute_index,
        actor_index=actor_index,
        dropped_attributes=dropped,
    )


def is_actor_attribute_bipartite(g: WeightedGraph) -> bool:
    """True iff every edge joins an Actor vertex to an attribute vertex."""
    for i, j, _ in g.edges():
        a = g.kinds[i] == VertexKind.ACTOR
        b = g.kinds[j] == VertexKind.ACTOR
        if a == b:
            return False
    return True
