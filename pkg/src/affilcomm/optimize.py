"""Partition search: exact enumeration, greedy agglomeration, annealing.

All three are deterministic. Annealing randomness comes from NumPy's
PCG64 generator seeded with SeedSequence([seed, restart]), so runs
reproduce bit-for-bit across platforms and across the numba/fallback
kernel paths.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import BadConfigError, EmptyGraphError, TooLargeError
from .graph import WeightedGraph
from .modularity import ModularityScore, Partition, modularity

BRUTE_FORCE_HARD_LIMIT = 14


@dataclass
class AnnealParams:
    initial_temp: float = 0.25
    cooling: float = 0.95
    steps_per_temp: int | None = None  # None -> 50 * n
    min_temp: float = 1e-4


@dataclass
class OptimizerConfig:
    algorithm: str = "greedy"  # brute | greedy | anneal
    seed: int = 0
    restarts: int = 5
    anneal: AnnealParams = field(default_factory=AnnealParams)
    brute_max_n: int = 12


@dataclass
class DetectionResult:
    partition: Partition
    score: ModularityScore
    algorithm: str
    seed: int = 0
    restarts_used: int = 1


def detect(g: WeightedGraph, cfg: OptimizerConfig) -> DetectionResult:
    if cfg.algorithm == "brute":
        return brute_force(g, brute_max_n=cfg.brute_max_n)
    if cfg.algorithm == "greedy":
        return greedy(g)
    if cfg.algorithm == "anneal":
        return anneal(g, cfg)
    raise BadConfigError(f"unknown algorithm {cfg.algorithm!r}")


def brute_force(g: WeightedGraph, brute_max_n: int = 12) -> DetectionResult:
    """Global optimum by enumerating all set partitions (small n only)."""
    if g.m == 0:
        raise EmptyGraphError("cannot optimize an edgeless graph")
    limit = min(brute_max_n, BRUTE_FORCE_HARD_LIMIT)
    if g.n > limit:
        raise TooLargeError(f"n = {g.n} exceeds brute-force limit {limit}")
    labels, _ = _kernels.brute_force_search(g.adjacency_matrix(), g.degrees(), g.m)
    part = Partition(labels)
    return DetectionResult(
        partition=part, score=modularity(g, part), algorithm="brute"
    )


def greedy(g: WeightedGraph) -> DetectionResult:
    """Agglomerative merging from singletons, best merge first.

    Repeatedly merges the community pair with the largest merge delta
    (ties: lexicographically smallest index pair) until every delta is
    negative; returns the best partition seen along the sequence.
    """
    if g.m == 0:
        raise EmptyGraphError("cannot optimize an edgeless graph")
    n = g.n
    m = g.m
    comm_deg = [g.weighted_degree(i) for i in range(n)]
    comm_nbrs: list[dict[int, int]] = [dict(g.neighbors(i)) for i in range(n)]
    members: list[list[int]] = [[i] for i in range(n)]
    alive = [True] * n

    def pair_delta_value(e_ab: int, d_a: int, d_b: int) -> float:
        return e_ab / m - (d_a * d_b) / (2.0 * m * m)

    pair_delta: dict[tuple[int, int], float] = {}
    heap: list[tuple[float, int, int]] = []
    for a in range(n):
        for b, w in comm_nbrs[a].items():
            if a < b:
                d = pair_delta_value(w, comm_deg[a], comm_deg[b])
                pair_delta[(a, b)] = d
                heap.append((-d, a, b))
    heapq.heapify(heap)

    q = -sum(d * d for d in comm_deg) / (4.0 * m * m)

    def snapshot() -> np.ndarray:
        labels = np.empty(n, dtype=np.int64)
        for c in range(n):
            if alive[c]:
                for v in members[c]:
                    labels[v] = c
        return labels

    best_q = q
    best_labels = snapshot()

    while heap:
        neg_d, a, b = heapq.heappop(heap)
        delta = -neg_d
        key = (a, b)
        if not alive[a] or not alive[b] or pair_delta.get(key) != delta:
            continue
        if delta < 0.0:
            break
        # merge b into a
        q += delta
        del pair_delta[key]
        alive[b] = False
        members[a].extend(members[b])
        members[b] = []
        for x in comm_nbrs[b]:
            pair_delta.pop((min(b, x), max(b, x)), None)
        for x, w in comm_nbrs[b].items():
            if x == a:
                continue
            comm_nbrs[a][x] = comm_nbrs[a].get(x, 0) + w
            del comm_nbrs[x][b]
            comm_nbrs[x][a] = comm_nbrs[a][x]
        comm_nbrs[a].pop(b, None)
        comm_nbrs[b] = {}
        comm_deg[a] += comm_deg[b]
        for x, w in comm_nbrs[a].items():
            d = pair_delta_value(w, comm_deg[a], comm_deg[x])
            k2 = (min(a, x), max(a, x))
            pair_delta[k2] = d
            heapq.heappush(heap, (-d, k2[0], k2[1]))
        if q > best_q:
            best_q = q
            best_labels = snapshot()

    # zero-degree communities merge at delta exactly 0; fold them into the
    # lowest-index surviving community so no non-negative merge remains
    zero = [c for c in range(n) if alive[c] and comm_deg[c] == 0]
    if zero and any(alive[c] and comm_deg[c] > 0 for c in range(n)):
        host = min(c for c in range(n) if alive[c] and comm_deg[c] > 0)
        for c in zero:
            best_labels[np.asarray(members[c], dtype=np.int64)] = host

    part = Partition(best_labels)
    return DetectionResult(partition=part, score=modularity(g, part), algorithm="greedy")


def anneal(g: WeightedGraph, cfg: OptimizerConfig) -> DetectionResult:
    """Seeded simulated annealing over single-vertex moves."""
    if g.m == 0:
        raise EmptyGraphError("cannot optimize an edgeless graph")
    p = cfg.anneal
    if p.initial_temp <= 0 or p.min_temp <= 0:
        raise BadConfigError("temperatures must be positive")
    if not 0.0 < p.cooling < 1.0:
        raise BadConfigError("cooling factor must lie strictly in (0, 1)")
    if p.steps_per_temp is not None and p.steps_per_temp <= 0:
        raise BadConfigError("steps per temperature must be positive")
    if cfg.restarts <= 0:
        raise BadConfigError("restarts must be positive")

    n = g.n
    indptr, indices, weights = g.csr()
    deg = g.degrees()
    m = g.m
    steps = p.steps_per_temp if p.steps_per_temp is not None else 50 * n

    overall_q = -math.inf
    overall_labels: np.ndarray | None = None
    for r in range(cfg.restarts):
        rng = np.random.default_rng(np.random.SeedSequence([int(cfg.seed), r]))
        k0 = math.isqrt(n)
        if k0 * k0 < n:
            k0 += 1  # ceil(sqrt(n))
        assign = rng.integers(0, k0, n).astype(np.int64)

        comm_deg = np.zeros(n, dtype=np.int64)
        comm_size = np.zeros(n, dtype=np.int64)
        np.add.at(comm_deg, assign, deg)
        np.add.at(comm_size, assign, 1)
        active = np.zeros(n, dtype=np.int64)
        pos = np.zeros(n, dtype=np.int64)
        free = np.zeros(n, dtype=np.int64)
        n_active = 0
        free_top = 0
        for c in range(n):
            if comm_size[c] > 0:
                active[n_active] = c
                pos[c] = n_active
                n_active += 1
        for c in range(n - 1, -1, -1):
            if comm_size[c] == 0:
                free[free_top] = c
                free_top += 1

        cur_q = _exact_q(g, assign)
        best_q = cur_q
        best_assign = assign.copy()

        t = p.initial_temp
        while t >= p.min_temp:
            uniforms = rng.random(3 * steps)
            cur_q, best_q, n_active, free_top = _kernels.anneal_stage(
                indptr,
                indices,
                weights,
                deg,
                m,
                t,
                uniforms,
                assign,
                comm_deg,
                comm_size,
                active,
                pos,
                free,
                n_active,
                free_top,
                cur_q,
                best_q,
                best_assign,
            )
            # resync against float drift from accumulated deltas
            cur_q = _exact_q(g, assign)
            t *= p.cooling

        if best_q > overall_q:
            overall_q = best_q
            overall_labels = best_assign

    part = Partition(overall_labels)
    return DetectionResult(
        partition=part,
        score=modularity(g, part),
        algorithm="anneal",
        seed=cfg.seed,
        restarts_used=cfg.restarts,
    )


def _exact_q(g: WeightedGraph, assign: np.ndarray) -> float:
    lk: dict[int, int] = {}
    dk: dict[int, int] = {}
    for v in range(g.n):
        c = int(assign[v])
        dk[c] = dk.get(c, 0) + g.weighted_degree(v)
    for i, j, w in g.edges():
        if assign[i] == assign[j]:
            c = int(assign[i])
            lk[c] = lk.get(c, 0) + w
    m = g.m
    q = 0.0
    for c, d in dk.items():
        q += lk.get(c, 0) / m - (d * d) / (4.0 * m * m)
    return q
