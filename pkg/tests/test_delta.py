import json
from fractions import Fraction

import pytest

from dpdelta.delta import (
    exceptional_flag_delta,
    global_delta,
    local_delta,
    verify_table,
)
from dpdelta.model import model_from_dict, model_to_dict


def test_local_f2_both_points(by_name):
    m = by_name["dp8-F2"]
    for pt in m.points:
        res = local_delta(m, pt)
        assert res.exact and res.lower == Fraction(3, 4)


def test_local_dp7_a1_e2(by_name):
    m = by_name["dp7-A1"]
    pt = next(p for p in m.points if p.label == "E2")
    res = local_delta(m, pt)
    assert res.exact and res.lower == Fraction(21, 31)


def test_local_weighted_estimate(by_name):
    m = by_name["dp4-smooth-wblowup"]
    res = exceptional_flag_delta(m, "Ebar")
    assert res.exact and res.lower == Fraction(18, 13)
    # every exceptional-flag point reports the shared group bound
    for pt in m.points:
        assert local_delta(m, pt) == res


def test_local_requires_membership(by_name):
    m = by_name["dp8-F1"]
    other = by_name["dp8-F2"]
    with pytest.raises(ValueError):
        local_delta(m, other.points[0])


def test_global_examples(by_name, catalog):
    cat = {m.name: m for m in catalog}
    assert global_delta(by_name["dp4-D5"], cat).lower == Fraction(3, 8)
    assert global_delta(by_name["dp5-A4"], cat).lower == Fraction(3, 7)
    assert global_delta(by_name["dp6-2A1"], cat).lower == Fraction(9, 14)
    for name in ("dp4-D5", "dp5-A4", "dp6-2A1"):
        assert global_delta(by_name[name], cat).exact


def test_global_needs_candidates(by_name):
    m = by_name["dp8-F1"]
    bare = model_from_dict(model_to_dict(m))
    bare.points = []
    bare.aux_models = []
    with pytest.raises(ValueError):
        global_delta(bare, {})


def test_bounds_positive_and_ordered(catalog):
    cat = {m.name: m for m in catalog}
    for m in catalog:
        for pt in m.points:
            res = local_delta(m, pt)
            assert 0 < res.lower <= res.upper


def test_interval_lower_never_undercuts_global(catalog):
    cat = {m.name: m for m in catalog}
    for m in catalog:
        if m.role != "base":
            continue
        g = global_delta(m, cat)
        for pt in m.points:
            assert local_delta(m, pt).lower >= g.lower
        for aux_name in m.aux_models:
            aux = cat[aux_name]
            exc = aux.exceptional()
            assert exceptional_flag_delta(aux, exc.name).lower >= g.lower


def test_verify_negative_control(by_name, catalog):
    data = model_to_dict(by_name["dp6-A2"])
    i = by_name["dp6-A2"].curve_index("E2")
    j = by_name["dp6-A2"].curve_index("E3")
    data["gram"][i][j] = "0"
    data["gram"][j][i] = "0"
    perturbed = model_from_dict(data)
    report = verify_table([perturbed])
    assert any(r.status == "FAIL" for r in report.rows)
    assert not report.ok
