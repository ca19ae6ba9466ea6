"""Surface models: curve lists, Gram matrices, point types, validation, I/O.

A model is a generator basis [anticanonical] + curves with its symmetric
Gram matrix, a list of point types driving the local delta estimates, and
optional expected values transcribed from the source tables so the
verifier is table-driven.

Base models describe a weak del Pezzo surface itself; auxiliary models
(role "aux") describe a blowup of a base surface used by the exceptional
flag estimate.  For an auxiliary model the ray that all invariants
integrate along starts at the pullback of the base anticanonical class,
which equals  -K + (A(E)-1) * E  for the unique exceptional generator E.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .lattice import DivisorExpr, GramMatrix
from .rational import parse_rational, rat, render_rational

__all__ = [
    "CurveInfo",
    "PointSpec",
    "ExpectedValue",
    "SurfaceModel",
    "CatalogError",
    "validate_model",
    "model_to_dict",
    "model_from_dict",
    "load_model",
    "load_catalog",
]

KIND_CURVE = "negative-curve-on-S"
KIND_FIBER = "fiber"
KIND_ORDINARY = "ordinary-exceptional"
KIND_WEIGHTED = "weighted-exceptional"
KINDS = (KIND_CURVE, KIND_FIBER, KIND_ORDINARY, KIND_WEIGHTED)

METHOD_CURVE_FLAG = "estimate-1"
METHOD_EXC_FLAG = "estimate-2"


class CatalogError(ValueError):
    """Malformed catalog data (parse errors, unknown generators, ...)."""


@dataclass(frozen=True)
class CurveInfo:
    name: str
    self_intersection: Fraction
    a_value: Fraction
    kind: str

    def is_line(self) -> bool:
        return self.kind == KIND_CURVE and self.self_intersection == -1


@dataclass(frozen=True)
class ExpectedValue:
    """An expected exact value, optionally with the source's printed form.

    `value` is authoritative (what recomputation must reproduce).  When
    `printed` is present and differs from `value`, the row is a known
    erratum: the verifier reports ERRATUM instead of PASS, never FAIL,
    as long as recomputation matches `value`.
    """

    value: Fraction
    printed: Fraction | None = None
    note: str = ""

    def is_erratum(self) -> bool:
        return self.printed is not None and self.printed != self.value


@dataclass(frozen=True)
class PointSpec:
    label: str
    flag: str
    incident: dict[str, int] = field(default_factory=dict)
    a_point: Fraction = Fraction(1)
    method: str = METHOD_CURVE_FLAG
    expected: tuple[Fraction, Fraction] | None = None  # (lower, upper)
    expected_s_w: ExpectedValue | None = None

    def expected_exact(self) -> Fraction | None:
        if self.expected and self.expected[0] == self.expected[1]:
            return self.expected[0]
        return None


@dataclass
class SurfaceModel:
    name: str
    degree: Fraction
    curves: list[CurveInfo]
    gram: GramMatrix
    points: list[PointSpec]
    singularities: str = ""
    role: str = "base"  # "base" | "aux"
    aux_models: list[str] = field(default_factory=list)
    provenance: str = ""
    expected_global_delta: Fraction | None = None
    expected_s: dict[str, ExpectedValue] = field(default_factory=dict)

    # -- basis helpers ------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.curves) + 1

    def curve_index(self, name: str) -> int:
        for i, c in enumerate(self.curves):
            if c.name == name:
                return i + 1
        raise CatalogError(f"model {self.name!r} has no generator {name!r}")

    def curve(self, name: str) -> CurveInfo:
        return self.curves[self.curve_index(name) - 1]

    def curve_names(self) -> list[str]:
        return [c.name for c in self.curves]

    def divisor(self, name: str) -> DivisorExpr:
        return DivisorExpr.basis(self.curve_index(name), self.dim)

    def anticanonical(self) -> DivisorExpr:
        return DivisorExpr.basis(0, self.dim)

    def exceptional(self) -> CurveInfo | None:
        """The unique exceptional generator of an auxiliary model."""
        exc = [c for c in self.curves if c.kind in (KIND_ORDINARY, KIND_WEIGHTED)]
        if len(exc) == 1:
            return exc[0]
        return None

    def ray_origin(self) -> DivisorExpr:
        """Start of the ray: -K for base models, the pullback for aux ones."""
        origin = self.anticanonical()
        exc = self.exceptional()
        if exc is not None:
            origin = origin + self.divisor(exc.name).scaled(exc.a_value - 1)
        return origin

    def normalization(self) -> Fraction:
        """Square of the ray origin: the degree the integrals divide by."""
        o = self.ray_origin()
        return self.gram.pair(o, o)

    def line_count(self) -> int:
        return sum(1 for c in self.curves if c.is_line())

    def pair_names(self, a: str, b: str) -> Fraction:
        return self.gram[self.curve_index(a), self.curve_index(b)]


# ---------------------------------------------------------------------------
# validation


def validate_model(model: SurfaceModel) -> list[str]:
    """Structural checks; returns human-readable violations (empty = valid).

    Adjunction (-K.C = 2 + C^2) is checked for every generator except
    weighted-exceptional ones, where it genuinely fails and a notice is
    emitted instead of a violation.
    """
    issues: list[str] = []
    g = model.gram
    if g.dim != model.dim:
        return [f"{model.name}: Gram matrix has dimension {g.dim}, expected {model.dim}"]
    if not g.is_symmetric():
        issues.append(f"{model.name}: Gram matrix is not symmetric")
    if g[0, 0] != model.degree:
        issues.append(
            f"{model.name}: gram[K,K] = {g[0, 0]} but degree = {model.degree}"
        )
    for i, c in enumerate(model.curves, start=1):
        if c.kind not in KINDS:
            issues.append(f"{model.name}: {c.name} has unknown kind {c.kind!r}")
            continue
        if g[i, i] != c.self_intersection:
            issues.append(
                f"{model.name}: {c.name} diagonal {g[i, i]} != declared {c.self_intersection}"
            )
        if c.kind == KIND_CURVE:
            if c.a_value != 1:
                issues.append(f"{model.name}: {c.name} is a surface curve with A != 1")
            if model.role == "base" and c.self_intersection not in (-1, -2):
                issues.append(
                    f"{model.name}: base-model curve {c.name} has self-intersection "
                    f"{c.self_intersection}, expected -1 or -2"
                )
        elif c.kind == KIND_FIBER:
            if c.a_value != 1 or c.self_intersection != 0:
                issues.append(f"{model.name}: fiber {c.name} must have A=1 and C^2=0")
        elif c.kind == KIND_ORDINARY:
            if c.a_value != 2 or c.self_intersection != -1:
                issues.append(
                    f"{model.name}: ordinary exceptional {c.name} must have A=2, C^2=-1"
                )
        if c.kind == KIND_WEIGHTED:
            continue  # adjunction skipped (notice, not a violation)
        expected = 2 + c.self_intersection
        if g[0, i] != expected:
            issues.append(
                f"{model.name}: adjunction fails for {c.name}: -K.C = {g[0, i]}, "
                f"expected {expected}"
            )
    names = {c.name for c in model.curves}
    for pt in model.points:
        if pt.flag not in names:
            issues.append(f"{model.name}: point {pt.label} has unknown flag {pt.flag}")
            continue
        fi = model.curve_index(pt.flag)
        if not (0 < pt.a_point <= 1):
            issues.append(f"{model.name}: point {pt.label} has A outside (0, 1]")
        if pt.method not in (METHOD_CURVE_FLAG, METHOD_EXC_FLAG):
            issues.append(f"{model.name}: point {pt.label} has method {pt.method!r}")
        for inc, mult in pt.incident.items():
            if inc == pt.flag:
                issues.append(
                    f"{model.name}: point {pt.label} lists its flag as incident"
                )
                continue
            if inc not in names:
                issues.append(
                    f"{model.name}: point {pt.label} has unknown incident curve {inc}"
                )
                continue
            if mult < 1:
                issues.append(
                    f"{model.name}: point {pt.label} has non-positive multiplicity"
                )
            if g[fi, model.curve_index(inc)] <= 0:
                issues.append(
                    f"{model.name}: point {pt.label} incident curve {inc} does not "
                    f"meet flag {pt.flag}"
                )
    for flag in model.expected_s:
        if flag not in names:
            issues.append(f"{model.name}: expected S for unknown flag {flag}")
    return issues


# ---------------------------------------------------------------------------
# serialization (JSON-compatible structured text)


def _expected_to_json(e: ExpectedValue):
    if e.printed is None and not e.note:
        return render_rational(e.value)
    out = {"value": render_rational(e.value)}
    if e.printed is not None:
        out["printed"] = render_rational(e.printed)
    if e.note:
        out["note"] = e.note
    return out


def _expected_from_json(obj) -> ExpectedValue:
    if isinstance(obj, str):
        return ExpectedValue(parse_rational(obj))
    return ExpectedValue(
        parse_rational(obj["value"]),
        parse_rational(obj["printed"]) if "printed" in obj else None,
        obj.get("note", ""),
    )


def model_to_dict(model: SurfaceModel) -> dict:
    points = []
    for pt in model.points:
        p = {
            "label": pt.label,
            "flag": pt.flag,
            "incident": dict(pt.incident),
            "a_point": render_rational(pt.a_point),
            "method": pt.method,
        }
        if pt.expected is not None:
            lo, hi = pt.expected
            if lo == hi:
                p["expected"] = render_rational(lo)
            else:
                p["expected"] = {
                    "lower": render_rational(lo),
                    "upper": render_rational(hi),
                }
        if pt.expected_s_w is not None:
            p["expected_s_w"] = _expected_to_json(pt.expected_s_w)
        points.append(p)
    out = {
        "name": model.name,
        "degree": render_rational(model.degree),
        "generators": [
            {
                "name": c.name,
                "kind": c.kind,
                "self_intersection": render_rational(c.self_intersection),
                "a_value": render_rational(c.a_value),
            }
            for c in model.curves
        ],
        "gram": [[render_rational(x) for x in row] for row in model.gram.entries],
        "points": points,
        "singularities": model.singularities,
        "role": model.role,
    }
    if model.aux_models:
        out["aux_models"] = list(model.aux_models)
    if model.provenance:
        out["provenance"] = model.provenance
    if model.expected_global_delta is not None:
        out["expected_global_delta"] = render_rational(model.expected_global_delta)
    if model.expected_s:
        out["expected_s"] = {
            flag: _expected_to_json(e) for flag, e in model.expected_s.items()
        }
    return out


def model_from_dict(data: dict) -> SurfaceModel:
    try:
        curves = [
            CurveInfo(
                name=c["name"],
                self_intersection=parse_rational(str(c["self_intersection"])),
                a_value=parse_rational(str(c["a_value"])),
                kind=c["kind"],
            )
            for c in data["generators"]
        ]
        names = {c.name for c in curves}
        points = []
        for p in data.get("points", []):
            expected = None
            if "expected" in p:
                e = p["expected"]
                if isinstance(e, dict):
                    expected = (parse_rational(e["lower"]), parse_rational(e["upper"]))
                else:
                    q = parse_rational(str(e))
                    expected = (q, q)
            for inc in p.get("incident", {}):
                if inc not in names:
                    raise CatalogError(
                        f"point {p.get('label')!r} references unknown curve {inc!r}"
                    )
            points.append(
                PointSpec(
                    label=p["label"],
                    flag=p["flag"],
                    incident={k: int(v) for k, v in p.get("incident", {}).items()},
                    a_point=parse_rational(str(p.get("a_point", "1"))),
                    method=p.get("method", METHOD_CURVE_FLAG),
                    expected=expected,
                    expected_s_w=_expected_from_json(p["expected_s_w"])
                    if "expected_s_w" in p
                    else None,
                )
            )
        gram = GramMatrix(
            [[parse_rational(str(x)) for x in row] for row in data["gram"]]
        )
        model = SurfaceModel(
            name=data["name"],
            degree=parse_rational(str(data["degree"])),
            curves=curves,
            gram=gram,
            points=points,
            singularities=data.get("singularities", ""),
            role=data.get("role", "base"),
            aux_models=list(data.get("aux_models", [])),
            provenance=data.get("provenance", ""),
            expected_global_delta=parse_rational(str(data["expected_global_delta"]))
            if "expected_global_delta" in data
            else None,
            expected_s={
                flag: _expected_from_json(e)
                for flag, e in data.get("expected_s", {}).items()
            },
        )
    except CatalogError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"malformed model data: {exc}") from exc
    if gram.dim != len(curves) + 1:
        raise CatalogError(
            f"model {data.get('name')!r}: gram is {gram.dim}x{gram.dim}, "
            f"expected {len(curves) + 1}"
        )
    return model


def load_model(path) -> SurfaceModel:
    """Load one model from a JSON file.  Does not auto-validate."""
    p = Path(path)
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{p}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if isinstance(data, list):
        raise CatalogError(f"{p}: expected a single model object, found a list")
    return model_from_dict(data)


def load_catalog(path) -> list[SurfaceModel]:
    """Load all models from a JSON file (object or list) or a directory."""
    p = Path(path)
    if p.is_dir():
        models = []
        for f in sorted(p.glob("*.json")):
            models.extend(load_catalog(f))
        return models
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{p}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if isinstance(data, dict):
        data = [data]
    return [model_from_dict(d) for d in data]
