"""Attribute-community membership tables and mixing/segregation reports.

Community indices in reports are renumbered 1-based by first appearance
in canonical row order (affiliations then attitudes), so the numbers are
reproducible regardless of how the optimizer labeled its communities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np
from sklearn.metrics import normalized_mutual_info_score

from .errors import EmptyPartitionError, MissingAttributeError
from .graph import VertexKind

FULLY_SEGREGATED = "fully_segregated"
LOW_MIXING = "low_mixing"
MIXED = "mixed"


@dataclass
class MembershipColumn:
    name: str
    assignment: dict[str, int]  # attribute label -> 1-based community index
    q: Optional[float] = None


@dataclass
class MembershipTable:
    rows: list[str]  # attribute labels, affiliations then attitudes
    kinds: dict[str, VertexKind]
    columns: list[MembershipColumn]


@dataclass
class MixingReport:
    # (community index, affiliation members, attitude members), only for
    # communities holding at least one attribute vertex
    per_community: list[tuple[int, int, int]]
    mixed_count: int
    total_communities: int


@dataclass
class SegregationSummary:
    classification: dict[str, str]  # dataset name -> category
    distribution: dict[str, list[str]] = field(default_factory=dict)


def renumber_by_row_order(
    rows: Sequence[str], raw_assignment: Mapping[str, int]
) -> dict[str, int]:
    """Relabel community indices 1-based by first appearance along rows."""
    remap: dict[int, int] = {}
    out: dict[str, int] = {}
    for label in rows:
        raw = raw_assignment[label]
        if raw not in remap:
            remap[raw] = len(remap) + 1
        out[label] = remap[raw]
    return out


def membership_table(
    rows: Sequence[str],
    kinds: Mapping[str, VertexKind],
    datasets: Sequence[tuple[str, Mapping[str, int], Optional[float]]],
    dropped: Optional[Mapping[str, Sequence[str]]] = None,
) -> MembershipTable:
    """Assemble per-dataset membership columns over a shared row order.

    `datasets` holds (name, raw attribute assignment, q). Attributes
    reported dropped for a dataset get no cell; any other missing
    attribute is an error.
    """
    dropped = dropped or {}
    columns = []
    for name, raw, q in datasets:
        missing = [
            r for r in rows if r not in raw and r not in set(dropped.get(name, ()))
        ]
        if missing:
            raise MissingAttributeError(
                f"dataset {name!r} has no assignment for {missing[0]!r}"
            )
        present = [r for r in rows if r in raw]
        columns.append(
            MembershipColumn(name=name, assignment=renumber_by_row_order(present, raw), q=q)
        )
    return MembershipTable(rows=list(rows), kinds=dict(kinds), columns=columns)


def mixing_count(
    assignment: Mapping[str, int], kinds: Mapping[str, VertexKind]
) -> MixingReport:
    """Count communities containing both affiliational and attitudinal members."""
    if not assignment:
        raise EmptyPartitionError("no attribute assignments to analyze")
    counts: dict[int, list[int]] = {}
    for label, comm in assignment.items():
        kind = kinds[label]
        pair = counts.setdefault(comm, [0, 0])
        if kind == VertexKind.AFFILIATION:
            pair[0] += 1
        elif kind == VertexKind.ATTITUDE:
            pair[1] += 1
        else:
            raise EmptyPartitionError(f"{label!r} is not an attribute vertex")
    per_community = [(c, aff, att) for c, (aff, att) in sorted(counts.items())]
    mixed = sum(1 for _, aff, att in per_community if aff > 0 and att > 0)
    return MixingReport(
        per_community=per_community,
        mixed_count=mixed,
        total_communities=len(per_community),
    )


def classify_mixing(report: MixingReport) -> str:
    if report.mixed_count == 0:
        return FULLY_SEGREGATED
    if report.mixed_count == 1:
        return LOW_MIXING
    return MIXED


def segregation_summary(
    reports: Sequence[tuple[str, MixingReport]]
) -> SegregationSummary:
    """Cross-dataset distribution of mixing categories, in input order."""
    classification = {name: classify_mixing(rep) for name, rep in reports}
    distribution: dict[str, list[str]] = {
        FULLY_SEGREGATED: [],
        LOW_MIXING: [],
        MIXED: [],
    }
    for name, _ in reports:
        distribution[classification[name]].append(name)
    return SegregationSummary(classification=classification, distribution=distribution)


def partition_nmi(labels_a: Sequence[int], labels_b: Sequence[int]) -> float:
    """Normalized mutual information between two labelings, in [0, 1]."""
    return float(
        normalized_mutual_info_score(np.asarray(labels_a), np.asarray(labels_b))
    )
