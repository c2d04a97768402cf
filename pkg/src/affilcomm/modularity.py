"""Newman-Girvan modularity scoring with incremental move/merge deltas.

Q = sum_k [ l_k / m  -  d_k^2 / (4 m^2) ]

where l_k is the edge weight internal to community k and d_k the sum of
weighted degrees over its vertices. l_k, d_k, m are kept as exact
integers; Q is assembled in double precision from those integer terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    EmptyGraphError,
    IncompletePartitionError,
    SameCommunityError,
    UnknownCommunityError,
    UnknownVertexError,
)
from .graph import WeightedGraph

# Sentinel community index: move a vertex into a fresh singleton.
NEW_COMMUNITY = -1


class Partition:
    """Assignment of every vertex to a community index in [0, c).

    Input labels may be arbitrary integers; they are compacted to
    0..c-1 by first appearance, so every index in [0, c) is used.
    """

    def __init__(self, labels: Sequence[int]):
        labels = np.asarray(labels, dtype=np.int64)
        remap: dict[int, int] = {}
        membership = np.empty(len(labels), dtype=np.int64)
        for i, lab in enumerate(labels):
            key = int(lab)
            if key not in remap:
                remap[key] = len(remap)
            membership[i] = remap[key]
        self.membership = membership
        self.c = len(remap)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(np.arange(n))

    @classmethod
    def one_community(cls, n: int) -> "Partition":
        return cls(np.zeros(n, dtype=np.int64))

    def community_of(self, v: int) -> int:
        return int(self.membership[v])

    def communities(self) -> list[list[int]]:
        """Vertex lists per community, in community-index order."""
        out: list[list[int]] = [[] for _ in range(self.c)]
        for v, k in enumerate(self.membership):
            out[int(k)].append(v)
        return out

    def __len__(self) -> int:
        return len(self.membership)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return np.array_equal(self.membership, other.membership)


@dataclass
class ModularityScore:
    q: float
    per_community: list[tuple[int, int]]  # (l_k, d_k) in community order
    m: int


def _check(g: WeightedGraph, p: Partition) -> None:
    if g.m == 0:
        raise EmptyGraphError("modularity undefined for m = 0")
    if len(p) != g.n:
        raise IncompletePartitionError(
            f"partition covers {len(p)} vertices, graph has {g.n}"
        )


def community_totals(g: WeightedGraph, p: Partition) -> tuple[np.ndarray, np.ndarray]:
    """Exact integer (l_k, d_k) arrays for a partition."""
    lk = np.zeros(p.c, dtype=np.int64)
    dk = np.zeros(p.c, dtype=np.int64)
    memb = p.membership
    np.add.at(dk, memb, g.degrees())
    for i, j, w in g.edges():
        if memb[i] == memb[j]:
            lk[memb[i]] += w
    return lk, dk


def modularity(g: WeightedGraph, p: Partition) -> ModularityScore:
    """Score a partition; per-community terms returned in index order."""
    _check(g, p)
    lk, dk = community_totals(g, p)
    m = g.m
    q = 0.0
    for k in range(p.c):
        q += lk[k] / m - (dk[k] * dk[k]) / (4.0 * m * m)
    return ModularityScore(q=q, per_community=list(zip(lk.tolist(), dk.tolist())), m=m)


def modularity_value(
    membership: np.ndarray,
    degrees: np.ndarray,
    indptr: np.ndarray,
    indices: np.ndarray,
    weights: np.ndarray,
    m: int,
) -> float:
    """Q straight from CSR arrays, no Partition compaction. Used by optimizers."""
    c = int(membership.max()) + 1 if len(membership) else 0
    dk = np.zeros(c, dtype=np.int64)
    np.add.at(dk, membership, degrees)
    # each undirected edge appears twice in CSR; sum both directions then halve
    same = membership[np.repeat(np.arange(len(degrees)), np.diff(indptr))] == membership[indices]
    internal = float(weights[same].sum()) / 2.0
    return internal / m - float((dk.astype(np.float64) ** 2).sum()) / (4.0 * m * m)


def delta_modularity_move(
    g: WeightedGraph,
    p: Partition,
    v: int,
    target: int,
    comm_degrees: Optional[np.ndarray] = None,
) -> float:
    """Q change from moving v to `target` (NEW_COMMUNITY for a fresh singleton).

    Equals modularity(g, p_moved).q - modularity(g, p).q without a full
    rescore; only v's neighborhood is scanned when comm_degrees is supplied.
    """
    _check(g, p)
    if not 0 <= v < g.n:
        raise UnknownVertexError(f"vertex {v} not in [0, {g.n})")
    if target != NEW_COMMUNITY and not 0 <= target < p.c:
        raise UnknownCommunityError(f"community {target} not in [0, {p.c})")
    a = p.community_of(v)
    if target == a:
        return 0.0
    if comm_degrees is None:
        comm_degrees = np.zeros(p.c, dtype=np.int64)
        np.add.at(comm_degrees, p.membership, g.degrees())
    w_va = 0
    w_vb = 0
    for u, w in g.neighbors(v):
        cu = p.community_of(u)
        if cu == a:
            w_va += w
        elif cu == target:
            w_vb += w
    kv = g.weighted_degree(v)
    d_a = int(comm_degrees[a])
    d_b = int(comm_degrees[target]) if target != NEW_COMMUNITY else 0
    m = g.m
    return (w_vb - w_va) / m + kv * (d_a - kv - d_b) / (2.0 * m * m)


def merge_delta(g: WeightedGraph, p: Partition, a: int, b: int) -> float:
    """Q change from merging communities a and b: e_ab/m - d_a*d_b/(2m^2)."""
    _check(g, p)
    for k in (a, b):
        if not 0 <= k < p.c:
            raise UnknownCommunityError(f"community {k} not in [0, {p.c})")
    if a == b:
        raise SameCommunityError(f"cannot merge community {a} with itself")
    memb = p.membership
    e_ab = 0
    d_a = 0
    d_b = 0
    for v in range(g.n):
        if memb[v] == a:
            d_a += g.weighted_degree(v)
            for u, w in g.neighbors(v):
                if memb[u] == b:
                    e_ab += w
        elif memb[v] == b:
            d_b += g.weighted_degree(v)
    m = g.m
    return e_ab / m - (d_a * d_b) / (2.0 * m * m)
