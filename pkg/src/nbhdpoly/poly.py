"""Exact univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

import functools
from typing import Iterable


class Polynomial:
    """Dense polynomial; ``coeffs[k]`` is the coefficient of ``x**k``.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and equality is plain tuple equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        terms = [int(c) for c in coeffs]
        while terms and terms[-1] == 0:
            terms.pop()
        self.coeffs: tuple[int, ...] = tuple(terms)

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Polynomial:
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        return cls((0,) * degree + (coeff,))

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return render_text(self)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> Polynomial:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def __call__(self, t: int) -> int:
        return evaluate(self, t)


def _coerce(value) -> Polynomial | None:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    return None


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        out[i] += c
    return Polynomial(out)


def subtract(a: Polynomial, b: Polynomial) -> Polynomial:
    return add(a, -b)


def multiply(a: Polynomial, b: Polynomial) -> Polynomial:
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return Polynomial(out)


@functools.lru_cache(maxsize=1024)
def binomial_power(k: int) -> Polynomial:
    """Return ``(1 + x)**k`` from the multiplicative binomial recurrence."""
    if k < 0:
        raise ValueError(f"negative exponent {k}")
    coeffs = [1]
    c = 1
    for i in range(k):
        c = c * (k - i) // (i + 1)
        coeffs.append(c)
    return Polynomial(coeffs)


def evaluate(p: Polynomial, t: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def render_text(p: Polynomial) -> str:
    """Render as ``c0 + c1*x + c2*x^2``, zero terms omitted, unit factors elided."""
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = "x" if k == 1 else f"x^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def render_json(p: Polynomial) -> list[str]:
    """Coefficients as decimal strings, index = degree."""
    return [str(c) for c in p.coeffs]


def parse_json(values: Iterable[str | int]) -> Polynomial:
    return Polynomial(int(v) for v in values)
