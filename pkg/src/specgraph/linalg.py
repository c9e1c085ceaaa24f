"""Exact integer/rational linear algebra on adjacency matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph, walk_vectors
from .polynomial import IntPolynomial, RatPolynomial, squarefree_part

IntMatrix = list[list[int]]


def bareiss_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    rows = [list(map(int, r)) for r in m]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, n_rows):
            f = rows[r][col]
            row_r, row_p = rows[r], rows[rank]
            for c in range(col + 1, n_cols):
                # exact by Sylvester's identity
                row_r[c] = (p * row_r[c] - f * row_p[c]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
    return rank


def char_poly(g: Graph) -> IntPolynomial:
    """Characteristic polynomial det(T I - A) by Faddeev-LeVerrier over Z."""
    n = g.n
    if n < 1:
        raise ValueError("characteristic polynomial needs n >= 1")
    a = g.adjacency_matrix(dtype=object)
    ident = np.identity(n, dtype=int).astype(object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        m = a.dot(m) + coeffs[n - k + 1] * ident
        tr = int(np.trace(a.dot(m)))
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        coeffs[n - k] = -tr // k
    return IntPolynomial(coeffs)


def min_poly(g: Graph) -> IntPolynomial:
    """Minimal polynomial of A (square-free part of the characteristic polynomial)."""
    return squarefree_part(char_poly(g))


def walk_matrix(g: Graph, v: int, cols: int | None = None) -> IntMatrix:
    """Rows = vertices, columns ``delta_v, A delta_v, ...`` (``cols`` of them, default n)."""
    cols = g.n if cols is None else cols
    vecs = list(walk_vectors(g, v, cols))
    return [[vecs[t][w] for t in range(cols)] for w in range(g.n)]


def local_min_poly(g: Graph, v: int) -> RatPolynomial:
    """Monic generator of ``{Q : Q(A) delta_v = 0}``."""
    basis: list[tuple[int, list[Fraction], list[Fraction]]] = []  # (pivot, reduced vector, combination)
    for t, x in enumerate(walk_vectors(g, v, g.n + 1)):
        vec = [Fraction(c) for c in x]
        comb = [Fraction(0)] * (t + 1)
        comb[t] = Fraction(1)
        for piv, b, bc in basis:
            f = vec[piv]
            if f:
                vec = [p - f * q for p, q in zip(vec, b)]
                for j, c in enumerate(bc):
                    comb[j] -= f * c
        piv = next((i for i, c in enumerate(vec) if c != 0), None)
        if piv is None:
            # comb . (x_0..x_t) = 0 with comb[t] = 1
            degree = t
            break
        lead = vec[piv]
        basis.append((piv, [c / lead for c in vec], [c / lead for c in comb]))
    else:  # pragma: no cover - Cayley-Hamilton bounds the degree by n
        raise ArithmeticError("Krylov sequence did not terminate")
    krylov = walk_matrix(g, v, degree)
    if bareiss_rank(krylov) != degree or bareiss_rank(walk_matrix(g, v, degree + 1)) != degree:
        raise ArithmeticError("Krylov dependency not confirmed by Bareiss rank")
    return RatPolynomial(comb)


def krylov_rank(g: Graph, v: int, cols: int) -> int:
    return bareiss_rank(walk_matrix(g, v, cols))
