"""The twelve acceptance criteria, each at its stated tolerance.

Every test records a one-line PASS/FAIL verdict; the lines are printed in the
terminal summary (see conftest.py) and immediately when run with ``-s``.
"""

import math
from math import gcd

import numpy as np
import pytest

from specgraph import families as fam
from specgraph.dominance import diameter_criterion, dominance_report, fingerprint, is_distance_regular, is_dominant_exact
from specgraph.enumeration import enumerate_connected
from specgraph.factor import factor_over_Q, is_irreducible
from specgraph.graph import (
    Graph,
    closed_walk_counts,
    complement,
    diameter,
    disjoint_union,
    distance_matrix,
    integer_matrix_powers,
    is_connected,
)
from specgraph.jacobi import (
    JacobiSpec,
    catalan,
    chebyshev_P,
    d_infinity_eigenvector_check,
    ja_eigenvector,
    ray_moment_check,
    semicircle_quadrature,
    star_block_diagonalize,
    star_top_eigenvalue,
    tridiag_eigenvalues,
    truncate,
)
from specgraph.linalg import char_poly, min_poly
from specgraph.polynomial import IntPolynomial
from specgraph.spectral import (
    average_vertex_measure,
    counting_measure,
    eigendecompose,
    spectral_walk_counts,
    total_variation,
    vertex_spectral_measure,
)

RESULTS: dict[int, tuple[bool, str]] = {}


def record(num: int, title: str, failures: list[str], detail: str = "") -> None:
    ok = not failures
    msg = detail if ok else "; ".join(failures[:4]) + (f" (+{len(failures) - 4} more)" if len(failures) > 4 else "")
    RESULTS[num] = (ok, f"{title}: {msg}")
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num:2d} {title}: {msg}")
    assert ok, msg


def dominant_set(g: Graph) -> set[str]:
    return set(dominance_report(g).dominant_labels)


# 1 -------------------------------------------------------------------------


def test_criterion_01_path_census():
    failures = []
    for n in range(2, 26):
        g = fam.path(n)
        got = [j for j in range(1, n + 1) if is_dominant_exact(g, j - 1)]
        want = [j for j in range(1, n + 1) if gcd(j, n + 1) == 1]
        if got != want:
            failures.append(f"P_{n}: {got} != {want}")
    p11 = dominance_report(fam.path(11)).dominant_labels
    if p11 != ["1", "5", "7", "11"]:
        failures.append(f"P_11 dominant {p11}")
    record(1, "path census", failures, "gcd(j, n+1) = 1 law holds for 2 <= n <= 25; P_11 -> {1, 5, 7, 11}")


# 2 -------------------------------------------------------------------------


def _union(*gs: Graph) -> Graph:
    out = gs[0]
    for h in gs[1:]:
        out = disjoint_union(out, h)
    return out


def test_criterion_02_five_vertex_census():
    failures = []
    counts = [sum(1 for _ in enumerate_connected(n)) for n in range(1, 6)]
    if counts != [1, 1, 2, 6, 21]:
        failures.append(f"connected counts {counts}")
    k1, k2 = Graph(1), fam.complete(2)
    described = {
        "G_2": complement(_union(k2, k1, k1)),
        "K_5 minus an edge": complement(_union(k2, k1, k1, k1)),
        "G_3": complement(_union(fam.complete(3), k1, k1)),
        "square plus a degree-3 vertex": complement(_union(k2, fam.path(3))),
        "star K_1,4 plus a leaf edge": complement(_union(fam.doubled_fan(2), k1)),
    }
    if not all(is_connected(g) for g in described.values()):
        failures.append("a described graph is disconnected")
    found = [g for n in range(1, 6) for g in enumerate_connected(n) if not dominance_report(g).has_dominant]
    if len(found) != 5:
        failures.append(f"{len(found)} graphs without dominant vertex")
    if sorted(map(fingerprint, found)) != sorted(map(fingerprint, described.values())):
        failures.append("fingerprints do not match the described graphs")
    if fingerprint(described["G_2"]) != fingerprint(fam.doubled_fan(2)) or fingerprint(described["G_3"]) != fingerprint(fam.doubled_fan(3)):
        failures.append("G_2/G_3 identification failed")
    record(2, "five-vertex census", failures, "counts 1,1,2,6,21; exactly 5 classes without dominant vertex, fingerprints match")


# 3 -------------------------------------------------------------------------


def _leaves(g: Graph) -> set[str]:
    return {g.label(v) for v in range(g.n) if g.degree(v) == 1}


@pytest.mark.xfail(
    strict=True,
    reason="E7: three dominant vertices, but the leaf of the length-2 arm is null for the simple eigenvalue 0; "
    "the 'exactly its three leaves' clause cannot hold (see decisions ledger)",
)
def test_criterion_03_coxeter_battery():
    failures = []
    e8 = fam.coxeter_E(8)
    if char_poly(e8) != IntPolynomial([1, 0, -8, 0, 14, 0, -7, 0, 1]):
        failures.append(f"E8 char poly {char_poly(e8)}")
    if not is_irreducible(char_poly(e8)):
        failures.append("E8 char poly not certified irreducible")
    rep = dominance_report(e8)
    if not (rep.all_dominant and rep.irreducible_over_Q):
        failures.append("E8 not all dominant")
    e7 = fam.coxeter_E(7)
    if dominant_set(e7) != _leaves(e7):
        failures.append(f"E7 dominant {sorted(dominant_set(e7))} but leaves {sorted(_leaves(e7))}")
    if dominance_report(fam.coxeter_E(6)).dominant_count != 4:
        failures.append("E6 dominant count != 4")
    et = fam.coxeter_E8_tilde()
    rep = dominance_report(et)
    center = next(v for v in range(et.n) if et.degree(v) == 3)
    dom = rep.dominant_vertices
    if len(dom) != 1 or et.degree(dom[0]) != 1 or distance_matrix(et)[center][dom[0]] != 5:
        failures.append(f"E8~ dominant {rep.dominant_labels}")
    for l in range(4, 13):
        got = dominant_set(fam.coxeter_D(l))
        if l == 4:
            want = {"v1", "v3", "v4"}
        elif l % 2:
            want = {f"v{l - 1}", f"v{l}"}
        else:
            want = {f"v{j}" for j in range(1, l - 2, 2)} | {f"v{l - 1}", f"v{l}"}
        if got != want:
            failures.append(f"D_{l}: {sorted(got)} != {sorted(want)}")
    record(3, "Coxeter battery", failures, "E8 irreducible and all dominant; E7 leaves; E6 4; E8~ unique leaf; D_4..D_12")


# 4 -------------------------------------------------------------------------


def test_criterion_04_no_dominant_families():
    failures = []
    for n in range(2, 21):
        g = fam.doubled_fan(n)
        if dominance_report(g).has_dominant:
            failures.append(f"G_{n} has a dominant vertex")
        sp = eigendecompose(g)
        r = math.sqrt(8 * n + 1)
        want_vals = [(1 + r) / 2, 0.0, -1.0, (1 - r) / 2]
        want_mult = [1, n - 1, 1, 1]
        order = np.argsort(want_vals)[::-1]
        want_vals = np.array(want_vals)[order]
        want_mult = tuple(np.array(want_mult)[order])
        if sp.multiplicities != want_mult or np.max(np.abs(sp.values - want_vals)) > 1e-9:
            failures.append(f"G_{n} spectrum {sp.values} {sp.multiplicities}")
    for n in range(4, 10):
        for k in range(2, (n + 1) // 2 + 1):
            if gcd(k, n - k + 1) != 1:
                continue
            g = fam.glued_paths(n, k)
            if dominance_report(g).has_dominant:
                failures.append(f"X_{n},{k} has a dominant vertex")
            if min_poly(g).degree != 2 * n - 1:
                failures.append(f"X_{n},{k} eigenvalues not all simple")
    for m, n in ((3, 4), (3, 5), (4, 5)):
        if dominance_report(fam.cycle_complement(m, n)).has_dominant:
            failures.append(f"C'_{m},{n} has a dominant vertex")
    fs = factor_over_Q(char_poly(fam.cycle_complement(3, 4)))
    spectrum = {-f.coeffs[0]: mult for f, mult in fs if f.degree == 1}
    if spectrum != {4: 1, 1: 1, 0: 2, -1: 2, -3: 1} or any(f.degree != 1 for f, _ in fs):
        failures.append(f"C'_3,4 exact spectrum {spectrum}")
    record(4, "no-dominant families", failures, "G_n, X_n,k, C'_m,n without dominant vertex; spectra verified")


# 5 -------------------------------------------------------------------------


def _annihilator(k: int, n: int) -> IntPolynomial:
    table = {
        1: [-k, 0, 1],
        2: [0, -(k + 1), 0, 1],
        3: [k, 0, -(k + 2), 0, 1],
        4: [0, 2 * k + 1, 0, -(k + 3), 0, 1],
        5: [-k, 0, 3 * k + 3, 0, -(k + 4), 0, 1],
    }
    return IntPolynomial(table[n])


def test_criterion_05_star_battery():
    failures = []
    for n in range(2, 9):
        g = fam.complete_bipartite(1, n)
        rep = dominance_report(g)
        if rep.dominant_vertices != list(range(1, n + 1)):
            failures.append(f"K_1,{n} dominant {rep.dominant_labels}")
    for m in range(2, 7):
        for n in range(m, 7):
            if not dominance_report(fam.complete_bipartite(m, n)).all_dominant:
                failures.append(f"K_{m},{n} not all dominant")
    for k in (3, 4, 5):
        for n in range(1, 7):
            g = fam.finite_star(k, n)
            if is_dominant_exact(g, 0):
                failures.append(f"S_{k},{n} core dominant")
            if n <= 5:
                a = g.adjacency_matrix(dtype=object)
                col = _annihilator(k, n).eval_matrix(a)[:, 0]
                if any(col):
                    failures.append(f"S_{k},{n}: printed polynomial does not annihilate the core")
    record(5, "star battery", failures, "K_1,n centers null, K_m,n all dominant, S_k,n cores null; 5 annihilators exact")


# 6 -------------------------------------------------------------------------


def test_criterion_06_walk_identities():
    failures = []
    p3 = fam.path(3)
    end, mid = closed_walk_counts(p3, 0, 22), closed_walk_counts(p3, 1, 22)
    for m in range(1, 11):
        if end[2 * m + 2] != 2 ** m or mid[2 * m + 2] != 2 ** (m + 1):
            failures.append(f"P_3 closed walks of length {2 * m + 2}: {end[2 * m + 2]}, {mid[2 * m + 2]}")
    worst = 0.0
    for g in fam.standard_suite():
        powers = integer_matrix_powers(g, 30)
        for v in range(g.n):
            for w in range(g.n):
                spec = spectral_walk_counts(g, v, w, 30)
                for n in range(31):
                    exact = int(powers[n][v, w])
                    err = abs(spec[n] - exact) / max(1, exact)
                    worst = max(worst, err)
                    if err >= 1e-9:
                        failures.append(f"{g.name} ({v},{w}) n={n}: rel err {err:.2e}")
    record(6, "walk identities", failures, f"P_3 length-(2m+2) counts 2^m / 2^(m+1); spectral formula worst rel err {worst:.1e} (< 1e-9)")


# 7 -------------------------------------------------------------------------


def test_criterion_07_measure_identities():
    failures = []
    worst_tv, min_perron = 0.0, math.inf
    for g in fam.standard_suite():
        tv = total_variation(counting_measure(g), average_vertex_measure(g))
        worst_tv = max(worst_tv, tv)
        if tv >= 1e-10:
            failures.append(f"{g.name}: TV {tv:.2e}")
        if is_connected(g):
            for v in range(g.n):
                c1 = float(vertex_spectral_measure(g, v).mass_at(0))
                min_perron = min(min_perron, c1)
                if not c1 > 1e-12:
                    failures.append(f"{g.name} vertex {v}: Perron weight {c1:.2e}")
    record(7, "measure identities", failures, f"worst TV {worst_tv:.1e} (< 1e-10); min Perron weight {min_perron:.3g}")


# 8 -------------------------------------------------------------------------


def test_criterion_08_walk_and_distance_regular():
    failures = []
    gs = [fam.cycle(m) for m in range(3, 13)] + [fam.complete(n) for n in range(1, 9)]
    gs += [fam.petersen(), fam.circulant(8, (1, 2))]
    for g in gs:
        rep = dominance_report(g)
        if not (rep.walk_regular and rep.all_dominant):
            failures.append(f"{g.name}: walk_regular={rep.walk_regular} all_dominant={rep.all_dominant}")
    pet = fam.petersen()
    if not is_distance_regular(pet):
        failures.append("Petersen not distance-regular")
    if not (min_poly(pet).degree == diameter(pet) + 1 == 3):
        failures.append("Petersen s != diameter + 1 = 3")
    pair = diameter_criterion(pet)
    if pair is None or not all(is_dominant_exact(pet, x) for x in pair):
        failures.append(f"diameter criterion returned {pair}")
    record(8, "walk-regular / distance-regular", failures, f"all walk-regular and all-dominant; Petersen pair {pair}")


# 9 -------------------------------------------------------------------------


def test_criterion_09_kary_trees():
    failures = []
    for k, r in ((2, 2), (2, 3), (3, 2)):
        g = fam.kary_tree(k, r)
        if dominant_set(g) != _leaves(g):
            failures.append(f"T_{k},{r}: dominant {sorted(dominant_set(g))}")
    record(9, "T_k,r dominant <=> leaf", failures, "(2,2), (2,3), (3,2)")


# 10 ------------------------------------------------------------------------


def test_criterion_10_jacobi_truncations():
    failures = []
    for a in (0.5, 1.0, 1.2, math.sqrt(2)):
        e = tridiag_eigenvalues(truncate(JacobiSpec.perturbed(a, 1000)))
        if e.min() < -2 - 1e-9 or e.max() > 2 + 1e-9:
            failures.append(f"a={a:.4g}: eigenvalue outside [-2, 2]")
    worst = 0.0
    for a in (1.5, math.sqrt(3), 2.0, 3.0):
        e = tridiag_eigenvalues(truncate(JacobiSpec.perturbed(a, 500)))
        out = np.sort(e[np.abs(e) > 2.01])
        lam = a * a / math.sqrt(a * a - 1)
        if len(out) != 2:
            failures.append(f"a={a:.4g}: {len(out)} outliers")
            continue
        err = max(abs(out[0] + lam), abs(out[1] - lam))
        worst = max(worst, err)
        if err >= 1e-8:
            failures.append(f"a={a:.4g}: outlier error {err:.2e}")
    for a in (math.sqrt(3), 2.0):
        res = ja_eigenvector(a, +1, 80).residual
        if not res < 1e-10:
            failures.append(f"a={a:.4g}: eigenvector residual {res:.2e}")
    record(10, "Jacobi J_a truncations", failures, f"confinement holds; outlier error {worst:.1e}; geometric residuals < 1e-10")


# 11 ------------------------------------------------------------------------


def test_criterion_11_ray_chebyshev():
    failures = []
    defect = max(
        abs(semicircle_quadrature(lambda t: chebyshev_P(m, t) * chebyshev_P(n, t)) - (m == n))
        for m in range(11)
        for n in range(11)
    )
    if not defect < 1e-8:
        failures.append(f"orthonormality defect {defect:.2e}")
    loops = closed_walk_counts(fam.truncated_ray(20), 0, 10)
    if [loops[2 * m] for m in range(6)] != [1, 1, 2, 5, 14, 42] or any(loops[2 * m] != catalan(m) for m in range(6)):
        failures.append(f"ray loops {[loops[2 * m] for m in range(6)]}")
    gap = max(ray_moment_check(j, m, 2 * m + j + 1).gap for j in range(5) for m in range(7))
    if not gap < 1e-9:
        failures.append(f"ray moment gap {gap:.2e}")
    record(11, "ray and Chebyshev", failures, f"orthonormality defect {defect:.1e}; Catalan loops; moment gap {gap:.1e}")


# 12 ------------------------------------------------------------------------


def test_criterion_12_infinite_star():
    failures = []
    worst = 0.0
    for k in (3, 4, 5):
        for N in (4, 8, 16):
            b = star_block_diagonalize(k, N)
            worst = max(worst, b.residual)
            if not b.residual < 1e-12:
                failures.append(f"k={k} N={N}: residual {b.residual:.2e}")
    for k in (3, 4):
        pred = k / math.sqrt(k - 1)
        top = star_top_eigenvalue(k, 500)
        dense = float(np.linalg.eigvalsh(fam.truncated_star(k, 500).adjacency_matrix(dtype=float))[-1])
        for name, val in (("block route", top), ("dense", dense)):
            if not abs(val - pred) < 1e-6:
                failures.append(f"k={k} {name}: top {val} vs {pred}")
    for N in (2, 5, 10):
        if d_infinity_eigenvector_check(N).residual != 0:
            failures.append(f"D_inf^({N}): A(delta_0 - delta_0') != 0")
    record(12, "infinite star and D_inf", failures, f"block residual {worst:.1e}; top eigenvalues within 1e-6; D_inf residual 0")
