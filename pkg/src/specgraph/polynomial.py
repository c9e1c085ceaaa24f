"""Dense univariate polynomials over Z and Q (coefficients in ascending order)."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence


def _trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_divmod(num: Sequence, den: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder over Q."""
    den = list(_trim(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in _trim(num)]
    if len(rem) < len(den):
        return [], rem
    lead = Fraction(den[-1])
    quot = [Fraction(0)] * (len(rem) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        q = rem[k + len(den) - 1] / lead
        quot[k] = q
        if q:
            for i, d in enumerate(den):
                rem[k + i] -= q * d
    return quot, list(_trim(rem[: len(den) - 1]))


def _format(coeffs: Sequence, var: str = "T") -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}{mono}" if isinstance(a, int) or a.denominator == 1 else f"({a}){mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]) -> None:
        c = _trim(int(x) for x in coeffs)
        self.coeffs: tuple[int, ...] = c

    @classmethod
    def from_roots_int(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def content(self) -> int:
        if not self.coeffs:
            return 0
        c = reduce(gcd, self.coeffs)
        return -c if self.lc < 0 else c

    def primitive(self) -> "IntPolynomial":
        """Divide by the content: coefficient gcd 1, positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        return IntPolynomial(x // c for x in self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, a):
        """Horner evaluation at a square (object or numeric) numpy matrix."""
        import numpy as np

        n = a.shape[0]
        acc = np.zeros((n, n), dtype=object)
        ident = np.identity(n, dtype=int).astype(object)
        for c in reversed(self.coeffs):
            acc = acc.dot(a) + c * ident
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return IntPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod_exact(self, other: "IntPolynomial") -> "IntPolynomial | None":
        """``self / other`` if the division is exact over Z, else ``None``."""
        q, r = poly_divmod(self.coeffs, other.coeffs)
        if r or any(x.denominator != 1 for x in q):
            return None
        return IntPolynomial(int(x) for x in q)

    def divides(self, other: "IntPolynomial") -> bool:
        """True if ``self`` divides ``other`` in Q[T]."""
        _, r = poly_divmod(other.coeffs, self.coeffs)
        return not r

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, RatPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({_format(self.coeffs)})"

    def __str__(self) -> str:
        return _format(self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict | str) -> "IntPolynomial":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(c) for c in obj["coeffs"])


class RatPolynomial:
    """Monic polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable) -> None:
        c = _trim(Fraction(x) for x in coeffs)
        if not c:
            raise ValueError("zero polynomial cannot be monic")
        if c[-1] != 1:
            c = tuple(x / c[-1] for x in c)
        self.coeffs: tuple[Fraction, ...] = c

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int(self) -> IntPolynomial:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coefficients")
        return IntPolynomial(int(c) for c in self.coeffs)

    def divides(self, other: "IntPolynomial | RatPolynomial") -> bool:
        _, r = poly_divmod(other.coeffs, self.coeffs)
        return not r

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (RatPolynomial, IntPolynomial)):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPolynomial({_format(self.coeffs)})"

    def __str__(self) -> str:
        return _format(self.coeffs)


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q[T] (Euclid with rational remainders)."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return IntPolynomial([])
    den = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in a), 1)
    return IntPolynomial(int(c * den) for c in a).primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """``p / gcd(p, p')`` made primitive: each distinct root once."""
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial is undefined")
    if p.degree == 0:
        return IntPolynomial([1])
    g = poly_gcd(p, p.derivative())
    q = p.primitive().divmod_exact(g)
    if q is None:
        # gcd is primitive, p primitive => quotient integral by Gauss' lemma
        raise ArithmeticError("inexact square-free division")
    return q.primitive()
