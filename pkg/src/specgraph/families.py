"""Generators for the graph families used throughout the package.

Vertices are always the dense integers ``0 .. n-1``; each generator attaches
display labels.  The label/index conventions are:

========================  ==================================================
path(n)                   index i  <->  label ``str(i+1)`` (vertices 1..n)
cycle(m)                  index i  <->  ``v{i}``
complete_bipartite(m,n)   ``v1..vm`` then ``w1..wn``
finite_star(k,n)          index 0 = core ``v0``; arm i, depth j at
                          ``1 + (i-1)*n + (j-1)``, label ``v{i},{j}``
doubled_fan(n)            ``v0, v0', v1 .. vn``
glued_paths(n,k)          ``v1..vn`` then ``v'1..v'n`` without ``v'k``
                          (glued onto ``vk``)
kary_tree(k,r)            breadth-first order, root first
coxeter_D(l)              ``v1..vl``
coxeter_E(l), E8~         branch vertex ``r`` first, then arms outward
truncated_ray(N)          index i <-> ``i`` for i = 0..N
truncated_dinf(N)         ``0, 0', 1, 2, .., N``
truncated_star(k,N)       same layout as finite_star(k,N)
========================  ==================================================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .graph import Graph, complement, disjoint_union


class FamilyError(ValueError):
    """Family parameters outside the family's domain."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyError(message)


def path(n: int) -> Graph:
    _require(n >= 1, f"path P_n requires n >= 1 (got n={n})")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], labels=[str(i + 1) for i in range(n)], name=f"P_{n}")


def cycle(m: int) -> Graph:
    _require(m >= 3, f"cycle C_m requires m >= 3 (got m={m})")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)], labels=[f"v{i}" for i in range(m)], name=f"C_{m}")


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph K_n requires n >= 1 (got n={n})")
    return Graph(n, combinations(range(n), 2), labels=[f"v{i + 1}" for i in range(n)], name=f"K_{n}")


def empty(n: int) -> Graph:
    _require(n >= 0, f"empty graph requires n >= 0 (got n={n})")
    return Graph(n, name=f"E_{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    _require(m >= 1 and n >= 1, f"K_(m,n) requires m, n >= 1 (got m={m}, n={n})")
    edges = [(j, m + k) for j in range(m) for k in range(n)]
    labels = [f"v{j + 1}" for j in range(m)] + [f"w{k + 1}" for k in range(n)]
    return Graph(m + n, edges, labels=labels, name=f"K_{m},{n}")


def _star_layout(k: int, n: int, name: str) -> Graph:
    edges = []
    labels = ["v0"]
    for i in range(1, k + 1):
        prev = 0
        for j in range(1, n + 1):
            idx = 1 + (i - 1) * n + (j - 1)
            edges.append((prev, idx))
            labels.append(f"v{i},{j}")
            prev = idx
    return Graph(1 + k * n, edges, labels=labels, name=name)


def finite_star(k: int, n: int) -> Graph:
    """S_{k,n}: a core of degree k with k arms of n vertices each."""
    _require(k >= 3, f"S_(k,n) requires k >= 3 (got k={k})")
    _require(n >= 1, f"S_(k,n) requires n >= 1 (got n={n})")
    return _star_layout(k, n, f"S_{k},{n}")


def doubled_fan(n: int) -> Graph:
    """G_n: adjacent v0, v0' both joined to each of v1..vn."""
    _require(n >= 2, f"G_n requires n >= 2 (got n={n})")
    edges = [(0, 1)]
    for i in range(n):
        edges += [(0, 2 + i), (1, 2 + i)]
    labels = ["v0", "v0'"] + [f"v{i + 1}" for i in range(n)]
    return Graph(n + 2, edges, labels=labels, name=f"G_{n}")


def glued_paths(n: int, k: int) -> Graph:
    """X_{n,k}: two copies of P_n glued at their k-th vertices."""
    _require(n >= 4, f"X_(n,k) requires n >= 4 (got n={n})")
    _require(2 <= k and 2 * k <= n + 1, f"X_(n,k) requires 2 <= k <= (n+1)/2 (got n={n}, k={k})")
    labels = [f"v{i}" for i in range(1, n + 1)]
    second: dict[int, int] = {k: k - 1}
    for i in range(1, n + 1):
        if i != k:
            second[i] = len(labels)
            labels.append(f"v'{i}")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(second[i], second[i + 1]) for i in range(1, n)]
    return Graph(2 * n - 1, edges, labels=labels, name=f"X_{n},{k}")


def cycle_complement(m: int, n: int) -> Graph:
    """C'_{m,n}: the complement of C_m disjoint-union C_n."""
    _require(m >= 3 and n >= 3, f"C'_(m,n) requires m, n >= 3 (got m={m}, n={n})")
    g = complement(disjoint_union(cycle(m), cycle(n)))
    labels = [f"a{i}" for i in range(m)] + [f"b{i}" for i in range(n)]
    return g.relabel(labels, name=f"C'_{m},{n}")


def kary_tree(k: int, r: int) -> Graph:
    """T_{k,r}: rooted tree, every internal vertex has k children, depth r."""
    _require(k >= 2, f"T_(k,r) requires k >= 2 (got k={k})")
    _require(r >= 1, f"T_(k,r) requires r >= 1 (got r={r})")
    labels = ["root"]
    edges = []
    frontier = [0]
    for depth in range(1, r + 1):
        nxt = []
        for parent in frontier:
            for _ in range(k):
                idx = len(labels)
                labels.append(f"d{depth}.{len(nxt) + 1}")
                edges.append((parent, idx))
                nxt.append(idx)
        frontier = nxt
    return Graph(len(labels), edges, labels=labels, name=f"T_{k},{r}")


def glued_arms(arms: list[int], name: str | None = None) -> Graph:
    """A branch vertex ``r`` with pendant paths of the given lengths."""
    labels = ["r"]
    edges = []
    for a, length in enumerate(arms, start=1):
        prev = 0
        for j in range(1, length + 1):
            idx = len(labels)
            labels.append(f"r{a}.{j}")
            edges.append((prev, idx))
            prev = idx
    return Graph(len(labels), edges, labels=labels, name=name)


def coxeter_A(l: int) -> Graph:
    _require(l >= 1, f"A_l requires l >= 1 (got l={l})")
    return Graph(l, [(i, i + 1) for i in range(l - 1)], labels=[f"v{i}" for i in range(1, l + 1)], name=f"A_{l}")


def coxeter_D(l: int) -> Graph:
    _require(l >= 4, f"D_l requires l >= 4 (got l={l})")
    edges = [(i, i + 1) for i in range(l - 3)]
    edges += [(l - 3, l - 2), (l - 3, l - 1)]
    return Graph(l, edges, labels=[f"v{i}" for i in range(1, l + 1)], name=f"D_{l}")


def coxeter_E(l: int) -> Graph:
    _require(l in (6, 7, 8), f"E_l requires l in {{6, 7, 8}} (got l={l})")
    return glued_arms([1, 2, l - 4], name=f"E_{l}")


def coxeter_E8_tilde() -> Graph:
    """Paths with 2, 3 and 6 vertices glued at one end vertex (9 vertices)."""
    g = glued_arms([1, 2, 5], name="E8~")
    labels = list(g.labels)
    labels[-1] = "l"
    return g.relabel(labels)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    labels = [f"o{i}" for i in range(5)] + [f"i{i}" for i in range(5)]
    return Graph(10, edges, labels=labels, name="Petersen")


def circulant(n: int, connections: tuple[int, ...] | list[int]) -> Graph:
    _require(n >= 2, f"circulant requires n >= 2 (got n={n})")
    conn = tuple(sorted(set(int(c) for c in connections)))
    _require(len(conn) > 0 and all(1 <= c < n for c in conn), f"circulant connections must lie in 1..n-1 (got {conn})")
    edges = {tuple(sorted((v, (v + c) % n))) for v in range(n) for c in conn}
    return Graph(n, edges, labels=[f"v{i}" for i in range(n)], name=f"Circ_{n}{list(conn)}")


def truncated_ray(N: int) -> Graph:
    """Vertices of the infinite ray at distance <= N from the origin 0."""
    _require(N >= 0, f"truncated ray requires N >= 0 (got N={N})")
    return Graph(N + 1, [(i, i + 1) for i in range(N)], labels=[str(i) for i in range(N + 1)], name=f"P^({N})")


def truncated_dinf(N: int) -> Graph:
    """Leaves 0 and 0' attached to vertex 1 of the path 1 - 2 - .. - N."""
    _require(N >= 1, f"truncated D_inf requires N >= 1 (got N={N})")
    labels = ["0", "0'"] + [str(j) for j in range(1, N + 1)]
    edges = [(0, 2), (1, 2)] + [(j, j + 1) for j in range(2, N + 1)]
    return Graph(N + 2, edges, labels=labels, name=f"D_inf^({N})")


def truncated_star(k: int, N: int) -> Graph:
    _require(k >= 3, f"truncated star requires k >= 3 (got k={k})")
    _require(N >= 1, f"truncated star requires N >= 1 (got N={N})")
    return _star_layout(k, N, f"S_{k}^({N})")


@dataclass(frozen=True)
class _Family:
    build: Callable[..., Graph]
    params: tuple[str, ...]
    doc: str


FAMILIES: dict[str, _Family] = {
    "path": _Family(path, ("n",), "path P_n"),
    "cycle": _Family(cycle, ("m",), "cycle C_m"),
    "complete": _Family(complete, ("n",), "complete graph K_n"),
    "complete-bipartite": _Family(complete_bipartite, ("m", "n"), "complete bipartite K_{m,n}"),
    "finite-star": _Family(finite_star, ("k", "n"), "finite star S_{k,n}"),
    "doubled-fan": _Family(doubled_fan, ("n",), "G_n, no dominant vertex"),
    "glued-paths": _Family(glued_paths, ("n", "k"), "tree X_{n,k}"),
    "cycle-complement": _Family(cycle_complement, ("m", "n"), "C'_{m,n}, complement of C_m + C_n"),
    "kary-tree": _Family(kary_tree, ("k", "r"), "k-ary rooted tree T_{k,r}"),
    "coxeter-A": _Family(coxeter_A, ("n",), "Coxeter A_n"),
    "coxeter-D": _Family(coxeter_D, ("n",), "Coxeter D_n"),
    "coxeter-E6": _Family(lambda: coxeter_E(6), (), "Coxeter E6"),
    "coxeter-E7": _Family(lambda: coxeter_E(7), (), "Coxeter E7"),
    "coxeter-E8": _Family(lambda: coxeter_E(8), (), "Coxeter E8"),
    "coxeter-E8tilde": _Family(coxeter_E8_tilde, (), "extended Coxeter E8~"),
    "petersen": _Family(petersen, (), "Petersen graph"),
    "circulant": _Family(circulant, ("n", "connections"), "circulant(n; connection set)"),
    "truncated-ray": _Family(truncated_ray, ("N",), "ray truncated at depth N"),
    "truncated-dinf": _Family(truncated_dinf, ("N",), "D_inf truncated at depth N"),
    "truncated-star": _Family(truncated_star, ("k", "N"), "infinite star S_k truncated at depth N"),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def __hash__(self) -> int:
        return hash((self.family, tuple(sorted((k, str(v)) for k, v in self.params.items()))))


def generate(spec: FamilySpec) -> Graph:
    try:
        fam = FAMILIES[spec.family]
    except KeyError:
        raise FamilyError(f"unknown family {spec.family!r}; known: {', '.join(sorted(FAMILIES))}") from None
    missing = [p for p in fam.params if p not in spec.params]
    if missing:
        raise FamilyError(f"family {spec.family!r} needs parameter(s) {', '.join(missing)}")
    extra = sorted(set(spec.params) - set(fam.params))
    if extra:
        raise FamilyError(f"family {spec.family!r} does not take parameter(s) {', '.join(extra)}")
    return fam.build(*(spec.params[p] for p in fam.params))


def standard_suite() -> list[Graph]:
    """Moderate-size instances of every family, used for cross-checks."""
    gs: list[Graph] = [complete(1), complete(2)]
    gs += [path(n) for n in range(3, 13)]
    gs += [cycle(m) for m in range(3, 13)]
    gs += [complete(n) for n in range(3, 9)]
    gs += [complete_bipartite(m, n) for m in range(1, 4) for n in range(max(m, 2), 5)]
    gs += [finite_star(k, n) for k in (3, 4) for n in (1, 2, 3)]
    gs += [doubled_fan(n) for n in (2, 3, 4, 6)]
    gs += [glued_paths(4, 2), glued_paths(5, 2), glued_paths(7, 3), glued_paths(6, 3)]
    gs += [cycle_complement(3, 4), cycle_complement(3, 5)]
    gs += [kary_tree(2, 2), kary_tree(2, 3), kary_tree(3, 2)]
    gs += [coxeter_D(l) for l in range(4, 10)]
    gs += [coxeter_E(6), coxeter_E(7), coxeter_E(8), coxeter_E8_tilde()]
    gs += [petersen(), circulant(8, (1, 2))]
    gs += [truncated_ray(6), truncated_dinf(5), truncated_star(3, 3)]
    return gs
