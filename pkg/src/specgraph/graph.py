"""Finite simple undirected graphs and their combinatorial predicates."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class Graph:
    """Immutable simple graph on the vertices ``0 .. n-1``.

    ``labels`` are display names only; equality and hashing look at the
    vertex count and the edge set.
    """

    __slots__ = ("n", "_nbrs", "labels", "name")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
        name: str | None = None,
    ) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for v, w in edges:
            if not (0 <= v < n and 0 <= w < n):
                raise ValueError(f"edge ({v}, {w}) out of range for n={n}")
            if v == w:
                raise ValueError(f"loop at vertex {v} not allowed")
            nbrs[v].add(w)
            nbrs[w].add(v)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self._nbrs = tuple(frozenset(s) for s in nbrs)
        self.labels = labels
        self.name = name

    @classmethod
    def from_matrix(cls, matrix, labels=None, name=None) -> "Graph":
        m = np.asarray(matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(m, m.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(m)):
            raise ValueError("adjacency matrix must have an empty diagonal")
        n = m.shape[0]
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if m[i, j]]
        return cls(n, edges, labels=labels, name=name)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, v: int, w: int) -> bool:
        return w in self._nbrs[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in range(self.n) for w in sorted(self._nbrs[v]) if v < w]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self._nbrs) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for v, w in self.edges():
            a[v, w] = a[w, v] = 1
        return a

    def relabel(self, labels: Sequence[str] | None, name: str | None = None) -> "Graph":
        return Graph(self.n, self.edges(), labels=labels, name=name or self.name)

    def permute(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[v], perm[w]) for v, w in self.edges()])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash((self.n, self._nbrs))

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.num_edges}>"


def complement(g: Graph) -> Graph:
    edges = [(v, w) for v in range(g.n) for w in range(v + 1, g.n) if not g.has_edge(v, w)]
    name = f"complement({g.name})" if g.name else None
    return Graph(g.n, edges, labels=g.labels, name=name)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = g.edges() + [(v + g.n, w + g.n) for v, w in h.edges()]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = [g.label(v) for v in range(g.n)] + [h.label(v) + "'" for v in range(h.n)]
    name = f"{g.name}+{h.name}" if g.name and h.name else None
    return Graph(g.n + h.n, edges, labels=labels, name=name)


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Distances from ``source``; unreachable vertices get ``math.inf``."""
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if dist[w] == math.inf:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d != math.inf for d in bfs_distances(g, 0))


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def diameter(g: Graph) -> float:
    """Largest distance; ``math.inf`` for a disconnected graph, 0 for n <= 1."""
    best: float = 0
    for row in distance_matrix(g):
        best = max(best, max(row, default=0))
    return best


@dataclass(frozen=True)
class Predicates:
    connected: bool
    bipartite: bool
    regular: int | None
    diameter: float
    degree_sequence: tuple[int, ...]


def predicates(g: Graph) -> Predicates:
    degrees = tuple(sorted(g.degree(v) for v in range(g.n)))
    regular = degrees[0] if degrees and degrees[0] == degrees[-1] else None
    return Predicates(
        connected=is_connected(g),
        bipartite=is_bipartite(g),
        regular=regular,
        diameter=diameter(g),
        degree_sequence=degrees,
    )


def apply_adjacency(g: Graph, x: Sequence[int]) -> list[int]:
    """Exact product ``A x`` for an integer vector ``x``."""
    return [sum(x[w] for w in g.neighbors(v)) for v in range(g.n)]


def walk_vectors(g: Graph, v: int, count: int) -> Iterator[list[int]]:
    """Yield ``A^t delta_v`` for ``t = 0 .. count-1`` with exact integers."""
    x = [0] * g.n
    x[v] = 1
    for t in range(count):
        yield x
        if t + 1 < count:
            x = apply_adjacency(g, x)


def walk_count(g: Graph, v: int, w: int, n: int) -> int:
    """Number of walks of length ``n`` from ``v`` to ``w`` (exact)."""
    if n < 0:
        raise ValueError("walk length must be non-negative")
    for x in walk_vectors(g, v, n + 1):
        pass
    return x[w]


def closed_walk_counts(g: Graph, v: int, n_max: int) -> list[int]:
    """``[walk_count(g, v, v, t) for t in 0..n_max]`` in one pass."""
    return [x[v] for x in walk_vectors(g, v, n_max + 1)]


def integer_matrix_powers(g: Graph, k_max: int) -> list[np.ndarray]:
    """Exact ``A^0 .. A^k_max`` as object arrays of Python ints."""
    a = g.adjacency_matrix(dtype=object)
    powers = [np.identity(g.n, dtype=int).astype(object)]
    for _ in range(k_max):
        powers.append(powers[-1].dot(a))
    return powers
