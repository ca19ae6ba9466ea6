"""Local and global delta bounds and the table-driven verifier.

Two bound shapes, following the estimates the catalog's `method` field
selects:

* curve-flag points ("estimate-1", flag C on the surface itself):
      lower = min( 1/S(C),  A(P)/S(C;P) ),       upper = A(C)/S(C)
* exceptional-flag points ("estimate-2", flag E on an auxiliary blowup
  model): the points O on E are all the model's points with that flag,
      lower = min( A(E)/S(E),  min_O A(O)/S(E;O) ),  upper = A(E)/S(E)

A result is exact when lower == upper.  The global delta of a base model
is the minimum over its own points and over the exceptional-flag groups
of its auxiliary models; it is exact when the smallest candidate is exact
and no other candidate's lower bound undercuts it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .invariants import a_divisor, a_point, s_divisor, s_flag_point
from .model import METHOD_EXC_FLAG, PointSpec, SurfaceModel, validate_model
from .rational import render_rational

__all__ = [
    "DeltaResult",
    "local_delta",
    "exceptional_flag_delta",
    "global_delta",
    "VerifyRow",
    "VerifyReport",
    "verify_table",
]


@dataclass(frozen=True)
class DeltaResult:
    lower: Fraction
    upper: Fraction
    witness: str

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def describe(self) -> str:
        if self.exact:
            return f"{render_rational(self.lower)} (exact)"
        return f"[{render_rational(self.lower)}, {render_rational(self.upper)}]"


def _curve_flag_delta(model: SurfaceModel, pt: PointSpec) -> DeltaResult:
    s_c = s_divisor(model, pt.flag)
    upper = a_divisor(model, pt.flag) / s_c
    s_w = s_flag_point(model, pt.flag, pt)
    lower = min(upper, a_point(pt) / s_w) if s_w > 0 else upper
    return DeltaResult(lower, upper, f"{model.name}:{pt.label}")


def exceptional_flag_delta(model: SurfaceModel, flag: str) -> DeltaResult:
    """Shared bound of all exceptional-flag points of an auxiliary model."""
    s_e = s_divisor(model, flag)
    upper = a_divisor(model, flag) / s_e
    lower = upper
    for o in model.points:
        if o.method == METHOD_EXC_FLAG and o.flag == flag:
            s_w = s_flag_point(model, flag, o)
            if s_w > 0:
                lower = min(lower, a_point(o) / s_w)
    return DeltaResult(lower, upper, f"{model.name}:{flag}")


def local_delta(model: SurfaceModel, pt: PointSpec) -> DeltaResult:
    """Bound for one catalog point (the point must belong to the model)."""
    if pt not in model.points:
        raise ValueError(f"point {pt.label!r} does not belong to {model.name!r}")
    if pt.method == METHOD_EXC_FLAG:
        return exceptional_flag_delta(model, pt.flag)
    return _curve_flag_delta(model, pt)


def _candidates(
    model: SurfaceModel, catalog: dict[str, SurfaceModel] | None
) -> list[DeltaResult]:
    out = [local_delta(model, pt) for pt in model.points]
    for aux_name in model.aux_models:
        if catalog is None or aux_name not in catalog:
            raise ValueError(
                f"{model.name}: auxiliary model {aux_name!r} not available"
            )
        aux = catalog[aux_name]
        flags = []
        for pt in aux.points:
            if pt.method == METHOD_EXC_FLAG and pt.flag not in flags:
                flags.append(pt.flag)
        for flag in flags:
            out.append(exceptional_flag_delta(aux, flag))
    return out


def global_delta(
    model: SurfaceModel, catalog: dict[str, SurfaceModel] | None = None
) -> DeltaResult:
    """Global delta: minimum over the model's exhaustive point case split."""
    candidates = _candidates(model, catalog)
    if not candidates:
        raise ValueError(f"{model.name}: no point types to take a minimum over")
    lower = min(c.lower for c in candidates)
    upper = min(c.upper for c in candidates)
    best = min(candidates, key=lambda c: (c.upper, c.lower))
    exact_min = [c for c in candidates if c.exact and c.lower == lower]
    if exact_min and lower == upper:
        return DeltaResult(lower, upper, exact_min[0].witness)
    return DeltaResult(lower, upper, best.witness)


# ---------------------------------------------------------------------------
# verification report

PASS = "PASS"
FAIL = "FAIL"
ERRATUM = "ERRATUM"


@dataclass(frozen=True)
class VerifyRow:
    model: str
    item: str  # "global", "point <label>", "S <flag>", "S_W <label>", "structure"
    status: str
    expected: str
    computed: str
    note: str = ""


@dataclass
class VerifyReport:
    rows: list[VerifyRow]

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.rows)

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, ERRATUM: 0}
        for r in self.rows:
            out[r.status] = out.get(r.status, 0) + 1
        return out


def _check_value(expected, computed: Fraction) -> tuple[str, str]:
    """Compare against an ExpectedValue; returns (status, note)."""
    if computed != expected.value:
        return FAIL, "recomputation disagrees with the authoritative value"
    if expected.is_erratum():
        note = expected.note or "printed value differs from recomputation"
        return ERRATUM, f"printed {render_rational(expected.printed)}: {note}"
    return PASS, ""


def verify_table(models: list[SurfaceModel]) -> VerifyReport:
    """Recompute everything the catalog carries expectations for.

    Per base model: global delta against the expected table value.  Per
    point with an expected local value: the local bound.  Per stored
    S-value (flag level or point level): exact equality, with known
    errata reported as ERRATUM instead of PASS.  Structural validation
    failures are FAIL rows.  All comparisons are exact.
    """
    catalog = {m.name: m for m in models}
    rows: list[VerifyRow] = []
    for model in sorted(models, key=lambda m: m.name):
        issues = validate_model(model)
        if issues:
            for issue in issues:
                rows.append(VerifyRow(model.name, "structure", FAIL, "valid", issue))
            continue
        try:
            _verify_model(model, catalog, rows)
        except Exception as exc:  # a broken catalog must report, not crash
            rows.append(
                VerifyRow(model.name, "computation", FAIL, "no error", repr(exc))
            )
    return VerifyReport(rows)


def _verify_model(
    model: SurfaceModel, catalog: dict[str, SurfaceModel], rows: list[VerifyRow]
) -> None:
    for flag, expected in sorted(model.expected_s.items()):
        computed = s_divisor(model, flag)
        status, note = _check_value(expected, computed)
        rows.append(
            VerifyRow(
                model.name,
                f"S {flag}",
                status,
                render_rational(expected.value),
                render_rational(computed),
                note,
            )
        )
    for pt in model.points:
        if pt.expected_s_w is not None:
            computed = s_flag_point(model, pt.flag, pt)
            status, note = _check_value(pt.expected_s_w, computed)
            rows.append(
                VerifyRow(
                    model.name,
                    f"S_W {pt.label}",
                    status,
                    render_rational(pt.expected_s_w.value),
                    render_rational(computed),
                    note,
                )
            )
        if pt.expected is not None:
            result = local_delta(model, pt)
            lo, hi = pt.expected
            got = (result.lower, result.upper)
            status = PASS if got == (lo, hi) else FAIL
            rows.append(
                VerifyRow(
                    model.name,
                    f"point {pt.label}",
                    status,
                    DeltaResult(lo, hi, "").describe(),
                    result.describe(),
                )
            )
    if model.role == "base" and model.expected_global_delta is not None:
        result = global_delta(model, catalog)
        expected = model.expected_global_delta
        status = PASS if (result.exact and result.lower == expected) else FAIL
        rows.append(
            VerifyRow(
                model.name,
                "global",
                status,
                render_rational(expected),
                result.describe(),
                "" if status == PASS else "global delta mismatch or inexact",
            )
        )
