import random
from fractions import Fraction

import pytest

from dpdelta.lattice import (
    BasisMismatchError,
    DivisorExpr,
    GramMatrix,
    is_negative_definite,
    solve_gram,
)
from dpdelta.rational import parse_rational, rational_sqrt, render_rational


def test_rational_round_trip():
    rng = random.Random(7)
    for _ in range(200):
        q = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert parse_rational(render_rational(q)) == q
    assert render_rational(Fraction(-3, 1)) == "-3"
    assert parse_rational(" -7 / 21 ") == Fraction(-1, 3)


def test_rational_parse_errors():
    with pytest.raises(ValueError):
        parse_rational("5/0")
    with pytest.raises(ValueError):
        parse_rational("a/b")


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


def _f1(by_name):
    return by_name["dp8-F1"]


def test_pair_examples(by_name):
    f1 = _f1(by_name)
    k = f1.anticanonical()
    s = f1.divisor("s")
    assert f1.gram.pair(k, k) == 8
    assert f1.gram.pair(DivisorExpr.zero(f1.dim), k) == 0
    assert f1.gram.pair(k - s.scaled(0), s) == 1


def test_pair_dimension_mismatch(by_name):
    f1 = _f1(by_name)
    other = by_name["dp7-smooth"]
    with pytest.raises(BasisMismatchError):
        f1.gram.pair(other.anticanonical(), f1.anticanonical())


def test_pair_symmetric_bilinear(catalog):
    rng = random.Random(11)
    for model in catalog[:6]:
        g = model.gram
        for _ in range(20):
            def rand_div():
                return DivisorExpr(
                    {
                        rng.randrange(model.dim): Fraction(
                            rng.randint(-9, 9), rng.randint(1, 9)
                        )
                        for _ in range(3)
                    },
                    model.dim,
                )

            a, b, c = rand_div(), rand_div(), rand_div()
            lam = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            assert g.pair(a, b) == g.pair(b, a)
            assert g.pair(a + b.scaled(lam), c) == g.pair(a, c) + lam * g.pair(b, c)


def test_negative_definite_examples():
    g1 = GramMatrix([[-1]])
    assert is_negative_definite(g1, [0])
    g2 = GramMatrix([[-2, 1], [1, -2]])
    assert is_negative_definite(g2, [0, 1])
    g0 = GramMatrix([[0]])
    assert not is_negative_definite(g0, [0])
    # two meeting (-1)-curves span a degenerate sublattice
    g3 = GramMatrix([[-1, 1], [1, -1]])
    assert not is_negative_definite(g3, [0, 1])


def test_negative_definite_matches_sampling(catalog):
    rng = random.Random(13)
    for model in catalog[:10]:
        g = model.gram
        indices = list(range(1, model.dim))
        for _ in range(10):
            size = rng.randint(1, min(4, len(indices)))
            support = sorted(rng.sample(indices, size))
            verdict = is_negative_definite(g, support)
            if not verdict:
                continue
            for _ in range(100):
                vec = DivisorExpr(
                    {
                        i: Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                        for i in support
                    },
                    model.dim,
                )
                if vec.is_zero():
                    continue
                assert g.pair(vec, vec) < 0


def test_solve_gram_f2_example(by_name):
    f2 = by_name["dp8-F2"]
    d = f2.anticanonical() - f2.divisor("f").scaled(2)
    sup = [f2.curve_index("s")]
    rhs = [f2.gram.pair(d, f2.divisor("s"))]
    assert solve_gram(f2.gram, sup, rhs) == [Fraction(1)]


def test_solve_gram_dp6_a2_example(by_name):
    m = by_name["dp6-A2"]
    d = m.anticanonical() - m.divisor("E2").scaled(3)
    support = [m.curve_index(c) for c in ("E1", "E3", "L2")]
    rhs = [m.gram.pair(d, DivisorExpr.basis(i, m.dim)) for i in support]
    sol = solve_gram(m.gram, support, rhs)
    assert sol == [Fraction(3, 2), Fraction(2), Fraction(2)]


def test_solve_gram_zero_rhs(by_name):
    m = by_name["dp6-A2"]
    support = [m.curve_index(c) for c in ("E1", "E2")]
    assert solve_gram(m.gram, support, [Fraction(0), Fraction(0)]) == [
        Fraction(0),
        Fraction(0),
    ]


def test_solve_gram_singular_raises():
    from dpdelta.lattice import SingularMatrixError

    g = GramMatrix([[-1, 1], [1, -1]])  # degenerate pair of meeting (-1)-curves
    with pytest.raises(SingularMatrixError):
        solve_gram(g, [0, 1], [Fraction(1), Fraction(1)])


def test_solve_gram_exact_residual(catalog):
    rng = random.Random(17)
    for model in catalog[:8]:
        indices = list(range(1, model.dim))
        for _ in range(10):
            size = rng.randint(1, min(4, len(indices)))
            support = sorted(rng.sample(indices, size))
            if not is_negative_definite(model.gram, support):
                continue
            rhs = [
                Fraction(rng.randint(-8, 8), rng.randint(1, 5)) for _ in support
            ]
            sol = solve_gram(model.gram, support, rhs)
            for row_i, i in enumerate(support):
                acc = sum(
                    (model.gram[i, j] * sol[k] for k, j in enumerate(support)),
                    Fraction(0),
                )
                assert acc == rhs[row_i]
