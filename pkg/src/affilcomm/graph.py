"""Undirected weighted graph with integer edge multiplicities.

Vertices are dense integer ids in [0, n). Edge weights are positive
integers (multiplicities), stored once per unordered pair. Self-loops
are rejected. After construction the graph is read-only in practice;
`csr()` caches a compressed-sparse-row view for the numeric kernels.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import SelfLoopError, UnknownVertexError, ZeroWeightError


class VertexKind(enum.Enum):
    ACTOR = "actor"
    AFFILIATION = "affiliation"
    ATTITUDE = "attitude"


class WeightedGraph:
    """Simple-structure undirected graph with integer multiplicities."""

    def __init__(
        self,
        n: int,
        kinds: Optional[Sequence[VertexKind]] = None,
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if kinds is not None and len(kinds) != n:
            raise ValueError("kinds must have one entry per vertex")
        if labels is not None and len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        self.n = n
        self.kinds = list(kinds) if kinds is not None else [VertexKind.ACTOR] * n
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        self._adj: list[dict[int, int]] = [dict() for _ in range(n)]
        self._deg = [0] * n
        self._m = 0
        self._csr: Optional[tuple[np.ndarray, np.ndarray, np.ndarray]] = None

    @property
    def m(self) -> int:
        """Total edge weight, counting multiplicity."""
        return self._m

    def total_edge_weight(self) -> int:
        return self._m

    def add_edge(self, i: int, j: int, w: int = 1) -> None:
        """Add weight w to the unordered pair (i, j), accumulating."""
        self._check_vertex(i)
        self._check_vertex(j)
        if i == j:
            raise SelfLoopError(f"self-loop on vertex {i}")
        if isinstance(w, bool) or not isinstance(w, (int, np.integer)):
            raise TypeError(f"edge weight must be an integer, got {w!r}")
        if w <= 0:
            raise ZeroWeightError(f"edge weight must be >= 1, got {w}")
        w = int(w)
        self._adj[i][j] = self._adj[i].get(j, 0) + w
        self._adj[j][i] = self._adj[j].get(i, 0) + w
        self._deg[i] += w
        self._deg[j] += w
        self._m += w
        self._csr = None

    def weighted_degree(self, i: int) -> int:
        self._check_vertex(i)
        return self._deg[i]

    def weight(self, i: int, j: int) -> int:
        """Weight of pair (i, j); 0 if absent."""
        self._check_vertex(i)
        self._check_vertex(j)
        return self._adj[i].get(j, 0)

    def neighbors(self, i: int) -> Iterator[tuple[int, int]]:
        """Yield (neighbor, weight) pairs of vertex i."""
        self._check_vertex(i)
        return iter(self._adj[i].items())

    def edges(self) -> Iterable[tuple[int, int, int]]:
        """Yield each edge once as (i, j, w) with i < j."""
        for i in range(self.n):
            for j, w in self._adj[i].items():
                if i < j:
                    yield i, j, w

    def degrees(self) -> np.ndarray:
        return np.asarray(self._deg, dtype=np.int64)

    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Adjacency as (indptr, indices, weights) int64 arrays."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for i in range(self.n):
                indptr[i + 1] = indptr[i] + len(self._adj[i])
            indices = np.empty(indptr[-1], dtype=np.int64)
            weights = np.empty(indptr[-1], dtype=np.int64)
            pos = 0
            for i in range(self.n):
                for j in sorted(self._adj[i]):
                    indices[pos] = j
                    weights[pos] = self._adj[i][j]
                    pos += 1
            self._csr = (indptr, indices, weights)
        return self._csr

    def adjacency_matrix(self) -> np.ndarray:
        """Dense symmetric int64 adjacency matrix (small graphs only)."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j, w in self.edges():
            a[i, j] = w
            a[j, i] = w
        return a

    def _check_vertex(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise UnknownVertexError(f"vertex {i} not in [0, {self.n})")
