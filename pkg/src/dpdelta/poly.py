"""Tiny exact polynomial helpers.

Everything the engine integrates is a polynomial of degree at most two
with rational coefficients, stored low-degree-first.  Piecewise
polynomials carry their own breakpoints; continuity is not enforced
because the only consumer is exact integration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rational import rat, rational_sqrt

__all__ = ["Poly", "PiecewisePoly", "IrrationalRootError"]


class IrrationalRootError(ArithmeticError):
    """A breakpoint or threshold turned out not to be rational."""


@dataclass(frozen=True)
class Poly:
    """Dense polynomial, coefficients low-degree-first, exact rationals."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs) -> "Poly":
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @staticmethod
    def const(c) -> "Poly":
        return Poly.of(c)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, v) -> Fraction:
        x = rat(v)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return Poly.of(*out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scaled(-1)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.coeffs or not other.coeffs:
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly.of(*out)

    def scaled(self, factor) -> "Poly":
        f = rat(factor)
        return Poly.of(*(f * c for c in self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def integral(self, lo, hi) -> Fraction:
        """Exact definite integral over [lo, hi]."""
        a, b = rat(lo), rat(hi)
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            total += c * (b ** (i + 1) - a ** (i + 1)) / (i + 1)
        return total

    def roots(self) -> list[Fraction]:
        """Rational roots of a polynomial of degree <= 2 (ascending).

        Raises IrrationalRootError if a quadratic has real irrational
        roots; every threshold in the catalog is rational, so hitting
        this signals a transcription error.
        """
        cs = self.coeffs
        if len(cs) <= 1:
            return []
        if len(cs) == 2:
            b, a = cs[0], cs[1]
            return [-b / a]
        c0, c1, c2 = cs
        disc = c1 * c1 - 4 * c2 * c0
        if disc < 0:
            return []
        sq = rational_sqrt(disc)
        if sq is None:
            raise IrrationalRootError(
                f"irrational roots of quadratic {tuple(map(str, cs))}"
            )
        r1 = (-c1 - sq) / (2 * c2)
        r2 = (-c1 + sq) / (2 * c2)
        return sorted({r1, r2})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = f"({c})" if i == 0 else f"({c})v" if i == 1 else f"({c})v^{i}"
            parts.append(term)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class PiecewisePoly:
    """Ordered pieces (lo, hi, poly) covering an interval of the ray."""

    pieces: tuple[tuple[Fraction, Fraction, Poly], ...]

    def integral(self) -> Fraction:
        return sum((p.integral(lo, hi) for lo, hi, p in self.pieces), Fraction(0))

    def __call__(self, v) -> Fraction:
        x = rat(v)
        for lo, hi, p in self.pieces:
            if lo <= x <= hi:
                return p(x)
        raise ValueError(f"{x} outside piecewise domain")
