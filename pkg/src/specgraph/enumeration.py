"""Brute-force canonical forms and enumeration of small connected graphs."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .graph import Graph

MAX_ENUMERATION_N = 7


def _refined_colors(g: Graph) -> list[int]:
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in g.neighbors(v)))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """Return ``(n, key, order)``: the minimum adjacency bit-string and a vertex order realising it.

    Only orders compatible with the colour-refinement partition are tried;
    the partition is isomorphism invariant so the minimum is still canonical.
    """
    n = g.n
    colors = _refined_colors(g)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    best_key = None
    best_order: tuple[int, ...] = tuple(range(n))
    for parts in product(*(permutations(cell) for cell in cells)):
        order = tuple(v for part in parts for v in part)
        key = 0
        for j in range(1, n):
            vj = order[j]
            nb = g.neighbors(vj)
            for i in range(j):
                key = (key << 1) | (order[i] in nb)
        if best_key is None or key < best_key:
            best_key, best_order = key, order
    return n, best_key or 0, best_order


def canonical_key(g: Graph) -> tuple[int, int]:
    n, key, _ = canonical_form(g)
    return n, key


def canonical_graph(g: Graph) -> Graph:
    _, _, order = canonical_form(g)
    pos = {v: i for i, v in enumerate(order)}
    return g.permute([pos[v] for v in range(g.n)])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_key(g) == canonical_key(h)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    seen: dict[tuple[int, int], Graph] = {}
    for h in _connected_classes(n - 1):
        base = h.edges()
        for mask in range(1, 1 << (n - 1)):
            edges = base + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            cand = Graph(n, edges)
            key = canonical_key(cand)
            if key not in seen:
                seen[key] = canonical_graph(cand)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (seen[k].num_edges, k)))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on ``n`` vertices."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_N} (got n={n})")
    for i, g in enumerate(_connected_classes(n)):
        yield g.relabel(None, name=f"conn{n}#{i}")
