"""Acceptance gate: one test per criterion, exact arithmetic throughout.

Each test prints a single PASS/FAIL line for its criterion (visible with
pytest -s or in captured output).  All comparisons are exact rational
equality; there are no tolerances anywhere.
"""

import json
import random
from fractions import Fraction

import pytest

from dpdelta import builtin_models
from dpdelta.cli import main as cli_main
from dpdelta.delta import ERRATUM, FAIL, PASS, global_delta, verify_table
from dpdelta.invariants import flag_profile, s_divisor, s_flag_point
from dpdelta.lattice import DivisorExpr, is_negative_definite, solve_gram
from dpdelta.model import KIND_WEIGHTED, model_from_dict, model_to_dict
from dpdelta.zariski import decompose_at

from conftest import catalog_flags

MODELS = builtin_models()
BY_NAME = {m.name: m for m in MODELS}
CATALOG = BY_NAME


def _report(criterion: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"acceptance {criterion}: {status}"
    if detail:
        line += f"  ({detail})"
    print(line)


# ---------------------------------------------------------------------------
# criterion 1: Main Theorem table reproduction (28 singular rows)


def test_criterion_1_main_theorem_table():
    singular = [m for m in MODELS if m.role == "base" and m.singularities]
    assert len(singular) == 28
    failures = []
    for m in sorted(singular, key=lambda m: (-m.degree, m.name)):
        result = global_delta(m, CATALOG)
        if not (result.exact and result.lower == m.expected_global_delta):
            failures.append(
                f"{m.name}: table {m.expected_global_delta}, computed {result.describe()}"
            )
    _report(
        "criterion 1 (main table, 28 singular rows)",
        not failures,
        "; ".join(failures),
    )
    assert not failures, (
        "table rows not reproduced: "
        + "; ".join(failures)
        + " -- for dp4-A3-5lines the summary value is not reproducible from "
        "its own intersection lattice (see the model provenance); the "
        "recomputed value 2/3 is exact and certified by the flag bound plus "
        "the point estimate"
    )


# ---------------------------------------------------------------------------
# criterion 2: smooth-surface values


def test_criterion_2_smooth_surfaces():
    expected = {
        "dp8-F1": Fraction(6, 7),
        "dp8-P1xP1": Fraction(1),
        "dp7-smooth": Fraction(21, 25),
        "dp6-smooth": Fraction(1),
        "dp5-smooth": Fraction(15, 13),
        "dp4-smooth": Fraction(4, 3),
    }
    failures = []
    for name, want in expected.items():
        result = global_delta(BY_NAME[name], CATALOG)
        if not (result.exact and result.lower == want):
            failures.append(f"{name}: want {want}, got {result.describe()}")
    _report("criterion 2 (smooth surfaces)", not failures, "; ".join(failures))
    assert not failures


# ---------------------------------------------------------------------------
# criterion 3: intermediate S-value spot checks (exact)


def test_criterion_3_s_value_spot_checks():
    flag_checks = [
        ("dp8-F1", "s", Fraction(7, 6)),
        ("dp8-F2", "f", Fraction(4, 3)),
        ("dp7-smooth-blowup", "EP", Fraction(38, 21)),
        ("dp6-A1", "L123", Fraction(4, 3)),
        ("dp6-smooth-blowup", "EP", Fraction(5, 3)),
        ("dp6-A1-blowup", "EP", Fraction(5, 3)),
        ("dp5-A3", "E3", Fraction(9, 5)),
        ("dp4-smooth-blowup2", "EP", Fraction(3, 2)),
        ("dp4-smooth-wblowup", "Ebar", Fraction(13, 6)),
    ]
    point_checks = [
        ("dp8-F1", "s", Fraction(13, 12)),
        ("dp6-A1", "L123*E1", Fraction(10, 9)),
    ]
    failures = []
    for name, flag, want in flag_checks:
        got = s_divisor(BY_NAME[name], flag)
        if got != want:
            failures.append(f"S({name},{flag}) = {got} != {want}")
    for name, label, want in point_checks:
        m = BY_NAME[name]
        pt = next(p for p in m.points if p.label == label)
        got = s_flag_point(m, pt.flag, pt)
        if got != want:
            failures.append(f"S_W({name},{label}) = {got} != {want}")
    assert len(flag_checks) + len(point_checks) >= 10
    _report("criterion 3 (S-value spot checks)", not failures, "; ".join(failures))
    assert not failures


# ---------------------------------------------------------------------------
# criterion 4: solver / segment / brute-force oracle agreement


def _negdef_subsets(model):
    out = []

    def extend(prefix, start):
        for k in range(start, model.dim):
            cand = prefix + [k]
            if is_negative_definite(model.gram, cand):
                out.append(cand)
                extend(cand, k + 1)

    extend([], 1)
    return out


def _affine_data(model, a, b, support):
    basis = [DivisorExpr.basis(i, model.dim) for i in support]
    x0 = solve_gram(model.gram, support, [model.gram.pair(a, e) for e in basis])
    x1 = solve_gram(model.gram, support, [-model.gram.pair(b, e) for e in basis])
    return list(zip(support, x0, x1))


def _oracle(model, a, b, subsets_affine, v):
    """All-subset Zariski oracle: the unique valid candidate at v."""
    g = model.gram
    d = a - b.scaled(v)
    accepted = []
    for support, rows in subsets_affine:
        coeffs = {i: x0 + x1 * v for i, x0, x1 in rows}
        if any(c < 0 for c in coeffs.values()):
            continue
        p = d
        for i, c in coeffs.items():
            p = p - DivisorExpr.basis(i, model.dim).scaled(c)
        if all(
            g.pair(p, DivisorExpr.basis(i, model.dim)) >= 0
            for i in range(1, model.dim)
        ):
            accepted.append({i: c for i, c in coeffs.items() if c})
    # the empty support (nef case) is a candidate too
    if all(
        g.pair(d, DivisorExpr.basis(i, model.dim)) >= 0
        for i in range(1, model.dim)
    ):
        accepted.append({})
    unique = {tuple(sorted(n.items())) for n in accepted}
    assert len(unique) == 1, f"oracle found {len(unique)} decompositions"
    return accepted[0]


def test_criterion_4_oracle_equivalence():
    rng = random.Random(20260808)
    failures = []
    profiles = 0
    for model, flag in catalog_flags(MODELS):
        a = model.ray_origin()
        b = model.divisor(flag)
        profile = flag_profile(model, flag)
        subsets = _negdef_subsets(model)
        subsets_affine = [(s, _affine_data(model, a, b, s)) for s in subsets]
        profiles += 1
        for _ in range(25):
            v = profile.tau * Fraction(rng.randint(1, 999), 1000)
            if v == 0 or v == profile.tau:
                continue
            d = a - b.scaled(v)
            p_fix, n_fix = decompose_at(model, d)
            seg = profile.segment_at(v)
            n_seg = {
                i: seg.coeff[i](v) for i in seg.support if seg.coeff[i](v) != 0
            }
            n_oracle = _oracle(model, a, b, subsets_affine, v)
            psq_fix = model.gram.pair(p_fix, p_fix)
            if not (n_fix == n_seg == n_oracle):
                failures.append(f"{model.name}/{flag} at v={v}: supports differ")
                continue
            if psq_fix != seg.psq(v):
                failures.append(f"{model.name}/{flag} at v={v}: volume differs")
    _report(
        "criterion 4 (oracle equivalence)",
        not failures,
        f"{profiles} profiles x 25 samples" + ("; " + "; ".join(failures[:3]) if failures else ""),
    )
    assert not failures


# ---------------------------------------------------------------------------
# criterion 5: structural invariant suite


def test_criterion_5_structural_invariants():
    violations = []
    for model in MODELS:
        g = model.gram
        for i, c in enumerate(model.curves, start=1):
            if c.kind == KIND_WEIGHTED:
                continue
            if g[0, i] != 2 + c.self_intersection:
                violations.append(f"{model.name}: adjunction fails for {c.name}")
    for model, flag in catalog_flags(MODELS):
        profile = flag_profile(model, flag)
        prev = None
        for seg in profile.segments:
            if seg.support and not is_negative_definite(model.gram, seg.support):
                violations.append(f"{profile.model_name}/{flag}: support not negative definite")
            for v in (seg.v_lo, seg.v_hi):
                for i in seg.support:
                    if seg.coeff[i](v) < 0:
                        violations.append(
                            f"{profile.model_name}/{flag}: negative coefficient at v={v}"
                        )
                for i, pdot in seg.pdot.items():
                    if not pdot.is_zero() and pdot(v) < 0:
                        violations.append(
                            f"{profile.model_name}/{flag}: P.C < 0 at v={v}"
                        )
            if seg.psq(seg.v_lo) < seg.psq(seg.v_hi):
                violations.append(f"{profile.model_name}/{flag}: volume not decreasing")
            if prev is not None and prev.psq(prev.v_hi) != seg.psq(seg.v_lo):
                violations.append(f"{profile.model_name}/{flag}: volume discontinuity")
            prev = seg
        if profile.segments[-1].psq(profile.tau) != 0:
            violations.append(f"{profile.model_name}/{flag}: volume nonzero at threshold")
        if profile.segments[0].v_lo != 0 or profile.segments[-1].v_hi != profile.tau:
            violations.append(f"{profile.model_name}/{flag}: segments do not cover [0, tau]")
    _report("criterion 5 (structural invariants)", not violations, "; ".join(violations[:4]))
    assert not violations


# ---------------------------------------------------------------------------
# criterion 6: errata handling


def test_criterion_6_errata():
    report = verify_table(MODELS)
    rows = {(r.model, r.item): r for r in report.rows}
    required_errata = [
        ("dp5-smooth", "S E1"),
        ("dp6-A1A2", "S E1"),
    ]
    failures = []
    for key in required_errata:
        row = rows.get(key)
        if row is None or row.status != ERRATUM:
            failures.append(f"{key} not reported as ERRATUM")
    for name in ("dp5-smooth", "dp6-A1A2"):
        row = rows.get((name, "global"))
        if row is None or row.status != PASS:
            failures.append(f"{name} global did not PASS")
    for r in report.rows:
        if r.status == ERRATUM and r.expected != r.computed:
            failures.append(f"erratum row {r.model}/{r.item} does not match recomputation")
    _report("criterion 6 (errata handling)", not failures, "; ".join(failures))
    assert not failures


# ---------------------------------------------------------------------------
# criterion 7: negative control


def test_criterion_7_negative_control(tmp_path, capsys):
    data = model_to_dict(BY_NAME["dp6-A2"])
    m = BY_NAME["dp6-A2"]
    i, j = m.curve_index("E2"), m.curve_index("E3")
    data["gram"][i][j] = "0"
    data["gram"][j][i] = "0"
    report = verify_table([model_from_dict(data)])
    fails = [r for r in report.rows if r.status == FAIL]
    path = tmp_path / "perturbed.json"
    path.write_text(json.dumps([data]))
    code = cli_main(["--catalog", str(path), "verify"])
    capsys.readouterr()
    ok = bool(fails) and code == 1
    _report(
        "criterion 7 (negative control)",
        ok,
        f"{len(fails)} FAIL rows, exit code {code}",
    )
    assert ok
