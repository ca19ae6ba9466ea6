import random
from fractions import Fraction

from dpdelta.invariants import (
    a_divisor,
    a_point,
    flag_profile,
    h_profile,
    s_divisor,
    s_flag_point,
)
from dpdelta.lattice import DivisorExpr
from dpdelta.model import PointSpec
from dpdelta.poly import Poly

from conftest import catalog_flags


def test_tau_examples(by_name):
    assert flag_profile(by_name["dp8-F2"], "f").tau == 4
    assert flag_profile(by_name["dp8-P1xP1"], "L1").tau == 2
    assert flag_profile(by_name["dp4-smooth-wblowup"], "Ebar").tau == 4


def test_s_divisor_examples(by_name):
    assert s_divisor(by_name["dp8-F1"], "s") == Fraction(7, 6)
    assert s_divisor(by_name["dp8-F2"], "f") == Fraction(4, 3)
    assert s_divisor(by_name["dp7-smooth-blowup"], "EP") == Fraction(38, 21)


def test_h_profile_f1_generic(by_name):
    m = by_name["dp8-F1"]
    pt = next(p for p in m.points if p.label == "s")
    h = h_profile(m, flag_profile(m, "s"), "s", pt)
    assert len(h.pieces) == 1
    lo, hi, poly = h.pieces[0]
    assert (lo, hi) == (0, 2)
    assert poly == Poly.of(Fraction(1, 2), 1, Fraction(1, 2))  # (1+v)^2/2


def test_h_profile_dp6_a1_incident(by_name):
    m = by_name["dp6-A1"]
    pt = next(p for p in m.points if p.label == "L123*E1")
    h = h_profile(m, flag_profile(m, "L123"), "L123", pt)
    assert [(lo, hi) for lo, hi, _ in h.pieces] == [(0, 1), (1, 3)]
    assert h.pieces[0][2] == Poly.of(0, 0, 2)  # 2v^2
    # (v-1)(3-v) + (3-v)^2/2
    assert h.pieces[1][2] == Poly.of(Fraction(3, 2), 1, Fraction(-1, 2))


def test_h_empty_support_is_half_square(by_name):
    m = by_name["dp4-smooth-blowup"]
    prof = flag_profile(m, "EP")
    pt = PointSpec(label="probe", flag="EP", incident={"Q1": 1})
    h = h_profile(m, prof, "EP", pt)
    for (lo, hi, poly), seg in zip(h.pieces, prof.segments):
        pdot = seg.pdot[m.curve_index("EP")]
        assert poly == (pdot * pdot).scaled(Fraction(1, 2))


def test_s_flag_point_examples(by_name):
    m = by_name["dp8-F1"]
    pt = next(p for p in m.points if p.label == "s")
    assert s_flag_point(m, "s", pt) == Fraction(13, 12)
    m = by_name["dp8-P1xP1"]
    pt = next(p for p in m.points if p.label == "L1")
    assert s_flag_point(m, "L1", pt) == Fraction(1)
    m = by_name["dp6-A1"]
    pt = next(p for p in m.points if p.label == "L123*E1")
    assert s_flag_point(m, "L123", pt) == Fraction(10, 9)


def test_a_values(by_name):
    assert a_divisor(by_name["dp8-F1"], "s") == 1
    assert a_divisor(by_name["dp7-smooth-blowup"], "EP") == 2
    assert a_divisor(by_name["dp4-smooth-wblowup"], "Ebar") == 3
    wbl = by_name["dp4-smooth-wblowup"]
    generic = next(p for p in wbl.points if p.label == "Ebar")
    orb = next(p for p in wbl.points if p.label == "Ebar.orb")
    assert a_point(generic) == 1
    assert a_point(orb) == Fraction(1, 2)


def test_s_less_than_tau_everywhere(catalog):
    for model, flag in catalog_flags(catalog):
        prof = flag_profile(model, flag)
        assert s_divisor(model, flag) < prof.tau


def test_segment_refinement_integral(catalog):
    # integrating the volume over a random refinement matches the segments
    rng = random.Random(5)
    for model, flag in catalog_flags(catalog)[:25]:
        prof = flag_profile(model, flag)
        total = sum(
            (seg.psq.integral(seg.v_lo, seg.v_hi) for seg in prof.segments),
            Fraction(0),
        )
        refined = Fraction(0)
        for seg in prof.segments:
            cut = seg.v_lo + (seg.v_hi - seg.v_lo) * Fraction(rng.randint(1, 9), 10)
            refined += seg.psq.integral(seg.v_lo, cut)
            refined += seg.psq.integral(cut, seg.v_hi)
        assert refined == total


def test_incidence_monotonicity(catalog):
    # adding an incident curve never decreases the point density integral
    for model in catalog:
        for pt in model.points:
            if not pt.incident:
                continue
            base = PointSpec(label="bare", flag=pt.flag, incident={})
            assert s_flag_point(model, pt.flag, pt) >= s_flag_point(
                model, pt.flag, base
            )


def test_all_base_curves_have_profiles(catalog):
    # every curve of every base surface is a legitimate flag
    for m in catalog:
        if m.role != "base":
            continue
        for c in m.curves:
            prof = flag_profile(m, c.name)
            assert prof.segments[0].psq(0) == m.normalization()
            assert 0 < s_divisor(m, c.name) < prof.tau


def test_s_divisor_against_simpson_quadrature(catalog):
    # Simpson's rule is exact on quadratics; feeding it volumes computed by
    # the fixed-v solver gives an integral route independent of the
    # walker's polynomial algebra
    from dpdelta.zariski import decompose_at

    for model, flag in catalog_flags(catalog)[:40]:
        prof = flag_profile(model, flag)
        a = model.ray_origin()
        b = model.divisor(flag)

        def vol(v):
            p, _ = decompose_at(model, a - b.scaled(v))
            return model.gram.pair(p, p)

        total = Fraction(0)
        for seg in prof.segments:
            mid = (seg.v_lo + seg.v_hi) / 2
            total += (
                (seg.v_hi - seg.v_lo)
                * (vol(seg.v_lo) + 4 * vol(mid) + vol(seg.v_hi))
                / 6
            )
        assert total / model.normalization() == s_divisor(model, flag)


def test_s_flag_point_against_simpson_quadrature(catalog):
    # same dual route for the point density: h is evaluated from raw
    # fixed-v decompositions, then Simpson-summed per segment
    from dpdelta.zariski import decompose_at

    checked = 0
    for model in catalog:
        for pt in model.points:
            prof = flag_profile(model, pt.flag)
            a = model.ray_origin()
            b = model.divisor(pt.flag)
            fi = model.curve_index(pt.flag)
            incident = {
                model.curve_index(name): mult for name, mult in pt.incident.items()
            }

            def h(v):
                p, n = decompose_at(model, a - b.scaled(v))
                pc = model.gram.pair(p, DivisorExpr.basis(fi, model.dim))
                local = sum(
                    (n.get(i, Fraction(0)) * mult for i, mult in incident.items()),
                    Fraction(0),
                )
                return pc * local + pc * pc / 2

            total = Fraction(0)
            for seg in prof.segments:
                mid = (seg.v_lo + seg.v_hi) / 2
                total += (
                    (seg.v_hi - seg.v_lo)
                    * (h(seg.v_lo) + 4 * h(mid) + h(seg.v_hi))
                    / 6
                )
            assert 2 * total / model.normalization() == s_flag_point(
                model, pt.flag, pt
            ), (model.name, pt.label)
            checked += 1
    assert checked > 100
