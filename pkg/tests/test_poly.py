import random
from fractions import Fraction

import pytest

from dpdelta.poly import IrrationalRootError, PiecewisePoly, Poly


def test_eval_and_arith():
    p = Poly.of(1, -2, 3)
    assert p(Fraction(1, 2)) == 1 - 1 + Fraction(3, 4)
    q = Poly.of(0, 1)
    assert (p * q).coeffs == (Fraction(0), Fraction(1), Fraction(-2), Fraction(3))
    assert (p - p).is_zero()


def test_integral_exact():
    p = Poly.of(0, 0, 3)  # 3v^2
    assert p.integral(0, 2) == 8
    assert p.integral(Fraction(1, 3), Fraction(2, 3)) == Fraction(
        (2**3 - 1**3), 27
    )


def test_roots():
    assert Poly.of(-6, 3).roots() == [Fraction(2)]
    assert Poly.of(25, -20, 4).roots() == [Fraction(5, 2)]
    assert Poly.of(8, -2, -1).roots() == [Fraction(-4), Fraction(2)]
    assert Poly.of(1, 0, 1).roots() == []
    with pytest.raises(IrrationalRootError):
        Poly.of(7, 0, -1).roots()


def test_piecewise_refinement_invariance():
    # splitting pieces at interior rationals must not change the integral
    rng = random.Random(23)
    pieces = (
        (Fraction(0), Fraction(1), Poly.of(1, 2, 3)),
        (Fraction(1), Fraction(3), Poly.of(-2, 0, 1)),
    )
    base = PiecewisePoly(pieces)
    total = base.integral()
    for _ in range(25):
        refined = []
        for lo, hi, p in pieces:
            cut = lo + (hi - lo) * Fraction(rng.randint(1, 9), 10)
            refined.append((lo, cut, p))
            refined.append((cut, hi, p))
        assert PiecewisePoly(tuple(refined)).integral() == total
