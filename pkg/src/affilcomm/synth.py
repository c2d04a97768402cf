"""Planted two-mode block datasets for recovery experiments.

Actors are split across blocks by share; each (actor, attribute) tie is
an independent coin flip with probability p_in inside the actor's block
and p_out outside it. Everything is a fixed function of the seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .build import AttributeCatalog, IncidenceRecord
from .errors import BadConfigError
from .graph import VertexKind


@dataclass
class SynthBlock:
    affiliations: list[str]
    attitudes: list[str]
    share: float

    def labels(self) -> list[str]:
        return list(self.affiliations) + list(self.attitudes)


@dataclass
class SynthConfig:
    seed: int = 0
    n_actors: int = 100
    blocks: list[SynthBlock] = field(default_factory=list)
    p_in: float = 0.9
    p_out: float = 0.05

    def validate(self) -> None:
        if self.n_actors < 1:
            raise BadConfigError("n_actors must be positive")
        if not self.blocks:
            raise BadConfigError("at least one block is required")
        if abs(sum(b.share for b in self.blocks) - 1.0) > 1e-9:
            raise BadConfigError("block shares must sum to 1")
        if not 0.0 <= self.p_out < self.p_in <= 1.0:
            raise BadConfigError("need 0 <= p_out < p_in <= 1")


@dataclass
class SurveyDataset:
    name: str
    records: list[IncidenceRecord]
    catalog: AttributeCatalog


def _actor_block_counts(n: int, shares: list[float]) -> list[int]:
    # largest-remainder rounding so counts are deterministic and sum to n
    raw = [n * s for s in shares]
    counts = [int(x) for x in raw]
    remainder = n - sum(counts)
    order = sorted(range(len(shares)), key=lambda i: (-(raw[i] - counts[i]), i))
    for i in order[:remainder]:
        counts[i] += 1
    return counts


def generate_synthetic(
    cfg: SynthConfig, name: Optional[str] = None
) -> tuple[SurveyDataset, dict[str, int]]:
    """Build a dataset plus the planted attribute-to-block partition."""
    cfg.validate()
    rng = np.random.default_rng(cfg.seed)

    catalog = AttributeCatalog(
        affiliations=[a for b in cfg.blocks for a in b.affiliations],
        attitudes=[a for b in cfg.blocks for a in b.attitudes],
    )
    attrs: list[tuple[str, VertexKind, int]] = []  # (label, kind, block)
    for bi, block in enumerate(cfg.blocks):
        for a in block.affiliations:
            attrs.append((a, VertexKind.AFFILIATION, bi))
        for a in block.attitudes:
            attrs.append((a, VertexKind.ATTITUDE, bi))

    counts = _actor_block_counts(cfg.n_actors, [b.share for b in cfg.blocks])
    actor_block = np.repeat(np.arange(len(cfg.blocks)), counts)
    width = len(str(cfg.n_actors - 1))
    actor_names = [f"actor{idx:0{width}d}" for idx in range(cfg.n_actors)]

    # one uniform per (actor, attribute) cell, row-major in actor order
    draws = rng.random((cfg.n_actors, len(attrs)))
    records: list[IncidenceRecord] = []
    for ai in range(cfg.n_actors):
        for ci, (label, kind, block) in enumerate(attrs):
            p = cfg.p_in if actor_block[ai] == block else cfg.p_out
            if draws[ai, ci] < p:
                records.append(
                    IncidenceRecord(actor=actor_names[ai], attribute=label, kind=kind)
                )

    planted = {label: block for label, _, block in attrs}
    dataset = SurveyDataset(
        name=name or f"synth-{cfg.seed}", records=records, catalog=catalog
    )
    return dataset, planted
