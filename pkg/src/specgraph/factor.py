"""Real-root isolation (Sturm) and factorisation over Q of totally real polynomials."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd

from .polynomial import IntPolynomial, poly_divmod, squarefree_part

MAX_FACTOR_DEGREE = 24


class NonRealRootsError(ValueError):
    pass


class DegreeCapError(ValueError):
    pass


def _integerize(coeffs) -> list[int]:
    """Positive multiple with integer coefficients (keeps signs)."""
    den = reduce(lambda x, y: x * y // gcd(x, y), (Fraction(c).denominator for c in coeffs), 1)
    out = [int(Fraction(c) * den) for c in coeffs]
    g = reduce(gcd, out, 0) or 1
    return [c // g for c in out]


def sturm_sequence(p: IntPolynomial) -> list[list[int]]:
    seq = [list(p.coeffs), list(p.derivative().coeffs)]
    while len(seq[-1]) > 1:
        _, r = poly_divmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append(_integerize([-c for c in r]))
    return seq


def _sign_at(coeffs: list[int], x: Fraction) -> int:
    d = len(coeffs) - 1
    acc = sum(c * x.numerator**k * x.denominator ** (d - k) for k, c in enumerate(coeffs))
    return (acc > 0) - (acc < 0)


def _variations(seq: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(c, x) for c in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at_infinity(seq: list[list[int]], sign: int) -> int:
    signs = [(c[-1] > 0) - (c[-1] < 0) for c in seq]
    if sign < 0:
        signs = [s if (len(c) - 1) % 2 == 0 else -s for s, c in zip(signs, seq)]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: IntPolynomial) -> int:
    """Number of distinct real roots of ``p``."""
    if p.degree <= 0:
        return 0
    seq = sturm_sequence(p)
    return _variations_at_infinity(seq, -1) - _variations_at_infinity(seq, +1)


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: every root has absolute value below it."""
    lc = abs(p.lc)
    return 1 + max(Fraction(abs(c), lc) for c in p.coeffs[:-1]) if p.degree > 0 else Fraction(1)


def _isolate(p: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi]`` each holding exactly one root."""
    seq = sturm_sequence(p)
    bound = root_bound(p)
    out = []
    stack = [(-bound, bound, _variations(seq, -bound), _variations(seq, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        count = vlo - vhi
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = _variations(seq, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    return sorted(out, reverse=True)


def real_root_intervals(p: IntPolynomial, bits: int) -> list[tuple[Fraction, Fraction]]:
    """Root enclosures of width <= 2**-bits, in decreasing order.

    ``p`` must be square-free with only real roots.
    """
    if p.degree < 1:
        return []
    if count_real_roots(p) != p.degree:
        if squarefree_part(p).degree != p.degree:
            raise ValueError("real_roots needs a square-free polynomial")
        raise NonRealRootsError(f"{p} has non-real roots")
    coeffs = list(p.coeffs)
    width = Fraction(1, 1 << max(bits, 0))
    out = []
    for lo, hi in _isolate(p):
        # exactly one simple root in (lo, hi]; p(lo) may vanish (neighbour's root)
        s_hi = _sign_at(coeffs, hi)
        if s_hi == 0:
            out.append((hi, hi))
            continue
        while hi - lo > width:
            mid = (lo + hi) / 2
            s_mid = _sign_at(coeffs, mid)
            if s_mid == 0:
                lo = hi = mid
                break
            if s_mid == s_hi:
                hi = mid
            else:
                lo = mid
        out.append((lo, hi))
    return out


def real_roots(p: IntPolynomial, precision: int = 15) -> list[Fraction]:
    """Roots of a square-free totally real ``p`` to ``precision`` decimal digits, decreasing."""
    bits = int(precision * 3.3219280948873626) + 4
    return [(lo + hi) / 2 for lo, hi in real_root_intervals(p, bits)]


def _bits_for(p: IntPolynomial) -> int:
    bound = root_bound(p)
    per_root = max(1, int(bound + 2).bit_length())
    return abs(p.lc).bit_length() + p.degree * (per_root + 1) + 40


def _irreducible_factors(sf: IntPolynomial, bits: int) -> list[IntPolynomial] | None:
    """Split a primitive square-free totally real polynomial by root-subset recombination."""
    lc = sf.lc
    one = 1 << bits
    roots = [round((lo + hi) / 2 * one) for lo, hi in real_root_intervals(sf, bits)]
    tol = one >> 20  # true factors are accurate to ~2**-40 by choice of bits
    remaining = sf
    factors: list[IntPolynomial] = []
    k = 1
    while 2 * k <= len(roots):
        found = False
        for subset in combinations(range(len(roots)), k):
            s = lc * sum(roots[i] for i in subset)
            frac = s % one
            if min(frac, one - frac) > tol:
                continue
            # lc * prod (T - r) in fixed point, highest degree last
            prod = [lc * one]
            for i in subset:
                r = roots[i]
                nxt = [0] * (len(prod) + 1)
                for j, c in enumerate(prod):
                    nxt[j + 1] += c
                    nxt[j] -= (c * r) >> bits
                prod = nxt
            cand = []
            for c in prod:
                q = (c + one // 2) // one
                if abs(c - q * one) > one // 4:
                    break
                cand.append(q)
            else:
                f = IntPolynomial(cand).primitive()
                if f.degree == k:
                    quo = remaining.divmod_exact(f)
                    if quo is not None:
                        factors.append(f)
                        remaining = quo
                        roots = [r for i, r in enumerate(roots) if i not in subset]
                        found = True
                        break
        if not found:
            k += 1
    if remaining.degree > 0:
        factors.append(remaining.primitive())
    elif abs(remaining.lc) != 1:
        return None
    return factors


def factor_over_Q(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Complete factorisation into primitive irreducibles with multiplicities.

    Only totally real inputs are supported.  The product of the factors
    (raised to their multiplicities) times ``p.content()`` equals ``p``.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    prim = p.primitive()
    if prim.degree == 0:
        return []
    sf = squarefree_part(prim)
    if sf.degree > MAX_FACTOR_DEGREE:
        raise DegreeCapError(f"square-free degree {sf.degree} exceeds cap {MAX_FACTOR_DEGREE}")
    if count_real_roots(sf) != sf.degree:
        raise NonRealRootsError(f"{p} has non-real roots")
    bits = _bits_for(sf)
    while True:
        irred = _irreducible_factors(sf, bits)
        if irred is not None and _product(irred) == sf:
            break
        bits *= 2  # pragma: no cover - precision is chosen with a wide margin
    out = []
    for f in sorted(irred, key=lambda f: (f.degree, f.coeffs)):
        mult = 0
        rest = prim
        while True:
            q = rest.divmod_exact(f)
            if q is None:
                break
            rest, mult = q, mult + 1
        out.append((f, mult))
    return out


def _product(fs: list[IntPolynomial]) -> IntPolynomial:
    out = IntPolynomial([1])
    for f in fs:
        out = out * f
    return out


def is_irreducible(p: IntPolynomial) -> bool:
    fs = factor_over_Q(p)
    return len(fs) == 1 and fs[0][1] == 1
