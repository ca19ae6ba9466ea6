"""Divisor expressions over a generator basis and their intersection form.

A divisor is a sparse rational combination of the generators of a surface
model (generator 0 is the anticanonical class, the rest are the named
curves).  The Gram matrix carries all pairwise intersection numbers; the
pairing, negative-definiteness tests and the exact linear solves on Gram
submatrices below are the only lattice operations the rest of the package
needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .rational import rat

__all__ = [
    "BasisMismatchError",
    "SingularMatrixError",
    "DivisorExpr",
    "GramMatrix",
    "is_negative_definite",
    "solve_gram",
]


class BasisMismatchError(ValueError):
    """Divisor and Gram matrix are indexed over different bases."""


class SingularMatrixError(ValueError):
    """A Gram submatrix expected to be invertible was singular."""


_ZERO = Fraction(0)


@dataclass(frozen=True)
class DivisorExpr:
    """Sparse rational combination of basis generators (absent index = 0)."""

    coeffs: Mapping[int, Fraction] = field(default_factory=dict)
    dim: int = 0

    @staticmethod
    def basis(index: int, dim: int) -> "DivisorExpr":
        return DivisorExpr({index: Fraction(1)}, dim)

    @staticmethod
    def zero(dim: int) -> "DivisorExpr":
        return DivisorExpr({}, dim)

    def coeff(self, index: int) -> Fraction:
        return self.coeffs.get(index, _ZERO)

    def _check(self, other: "DivisorExpr") -> None:
        if self.dim != other.dim:
            raise BasisMismatchError(
                f"divisors over bases of size {self.dim} and {other.dim}"
            )

    def __add__(self, other: "DivisorExpr") -> "DivisorExpr":
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            s = out.get(i, _ZERO) + c
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        return DivisorExpr(out, self.dim)

    def __sub__(self, other: "DivisorExpr") -> "DivisorExpr":
        return self + (-other)

    def __neg__(self) -> "DivisorExpr":
        return DivisorExpr({i: -c for i, c in self.coeffs.items()}, self.dim)

    def scaled(self, factor) -> "DivisorExpr":
        f = rat(factor)
        if not f:
            return DivisorExpr({}, self.dim)
        return DivisorExpr({i: f * c for i, c in self.coeffs.items()}, self.dim)

    def __mul__(self, factor) -> "DivisorExpr":
        return self.scaled(factor)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs.values())


class GramMatrix:
    """Symmetric matrix of exact intersection numbers, one row per generator."""

    def __init__(self, entries: Sequence[Sequence]) -> None:
        rows = [[rat(x) for x in row] for row in entries]
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        self.entries = rows
        self.dim = n

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.dim)
            for j in range(i)
        )

    def pair(self, a: DivisorExpr, b: DivisorExpr) -> Fraction:
        """Bilinear pairing a^T G b."""
        if a.dim != self.dim or b.dim != self.dim:
            raise BasisMismatchError(
                f"divisor/Gram dimension mismatch ({a.dim}, {b.dim}) vs {self.dim}"
            )
        total = _ZERO
        for i, ca in a.coeffs.items():
            row = self.entries[i]
            for j, cb in b.coeffs.items():
                total += ca * row[j] * cb
        return total

    def submatrix(self, indices: Sequence[int]) -> list[list[Fraction]]:
        return [[self.entries[i][j] for j in indices] for i in indices]


def _det(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    m = [row[:] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            det = -det
        pivot = m[col][col]
        det *= pivot
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / pivot
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def is_negative_definite(gram: GramMatrix, support: Iterable[int]) -> bool:
    """Exact test via signs of leading principal minors: (-1)^k det_k > 0."""
    idx = sorted(set(support))
    if not idx:
        return False
    if any(i < 0 or i >= gram.dim for i in idx):
        raise IndexError(f"support indices {idx} out of range")
    sub = gram.submatrix(idx)
    for k in range(1, len(idx) + 1):
        minor = _det([row[:k] for row in sub[:k]])
        if (minor if k % 2 == 0 else -minor) <= 0:
            return False
    return True


def solve_gram(
    gram: GramMatrix, support: Sequence[int], rhs: Sequence[Fraction]
) -> list[Fraction]:
    """Solve (G restricted to support) x = rhs exactly.

    `support` fixes the row/column order of the restricted system and of
    the returned solution.  Raises SingularMatrixError defensively; under
    the negative-definite precondition this cannot trigger.
    """
    idx = list(support)
    if len(rhs) != len(idx):
        raise BasisMismatchError("right-hand side does not match support size")
    n = len(idx)
    aug = [
        [gram.entries[i][j] for j in idx] + [rat(rhs[k])]
        for k, i in enumerate(idx)
    ]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if aug[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularMatrixError("singular Gram submatrix")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col] / pivot
                for c in range(col, n + 1):
                    aug[r][c] -= f * aug[col][c]
    return [aug[r][n] / aug[r][r] for r in range(n)]
