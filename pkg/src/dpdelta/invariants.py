"""Fujita-style functionals on a surface model.

For a flag curve C the ray is  D(v) = O - v*C  where O is the model's ray
origin (the anticanonical class, or its pullback on an auxiliary blowup
model).  With P(v)/N(v) the Zariski decomposition of D(v):

* ``s_divisor``      S(C)    = (1/O^2) * integral of P(v)^2 over [0, tau]
* ``s_flag_point``   S(C;P)  = (2/O^2) * integral of h over [0, tau], with
                     h(v) = (P.C) * (N.C at P) + (P.C)^2 / 2,
                     (N.C at P) = sum of N-coefficients of the curves
                     through P weighted by local multiplicity.

A-values come from the catalog: 1 for curves on the surface (and fibers),
2 for ordinary exceptional curves, verbatim for the weighted one; a point
carries its own A (1 unless the different is supported there).

Profiles are cached per (model name, flag) behind a lock: several points
share one flag profile and verification fans out across models.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .model import KIND_WEIGHTED, PointSpec, SurfaceModel
from .poly import PiecewisePoly, Poly
from .zariski import ZariskiProfile, parametric_profile

__all__ = [
    "flag_profile",
    "tau",
    "s_divisor",
    "h_profile",
    "s_flag_point",
    "a_divisor",
    "a_point",
    "clear_cache",
]

_cache: dict[tuple[str, str], ZariskiProfile] = {}
_cache_lock = threading.Lock()


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def flag_profile(model: SurfaceModel, flag: str) -> ZariskiProfile:
    """Zariski profile of the model's ray against the given flag curve."""
    key = (model.name, flag)
    with _cache_lock:
        cached = _cache.get(key)
    if cached is not None:
        return cached
    profile = parametric_profile(model, model.ray_origin(), model.divisor(flag))
    with _cache_lock:
        _cache[key] = profile
    return profile


def tau(profile: ZariskiProfile) -> Fraction:
    return profile.tau


def s_divisor(model: SurfaceModel, flag: str) -> Fraction:
    profile = flag_profile(model, flag)
    total = sum(
        (seg.psq.integral(seg.v_lo, seg.v_hi) for seg in profile.segments),
        Fraction(0),
    )
    return total / model.normalization()


def h_profile(
    model: SurfaceModel, profile: ZariskiProfile, flag: str, pt: PointSpec
) -> PiecewisePoly:
    """The local volume density h(v) of a point on the flag curve."""
    if pt.flag != flag:
        raise ValueError(f"point {pt.label} is not on flag {flag}")
    flag_idx = model.curve_index(flag)
    incident = {model.curve_index(name): mult for name, mult in pt.incident.items()}
    pieces = []
    for seg in profile.segments:
        pc = seg.pdot[flag_idx]
        local = Poly.of()
        for idx, mult in incident.items():
            if idx in seg.coeff:
                local = local + seg.coeff[idx].scaled(mult)
        h = pc * local + (pc * pc).scaled(Fraction(1, 2))
        pieces.append((seg.v_lo, seg.v_hi, h))
    return PiecewisePoly(tuple(pieces))


def s_flag_point(model: SurfaceModel, flag: str, pt: PointSpec) -> Fraction:
    profile = flag_profile(model, flag)
    h = h_profile(model, profile, flag, pt)
    return 2 * h.integral() / model.normalization()


def a_divisor(model: SurfaceModel, flag: str) -> Fraction:
    """Log discrepancy of the flag divisor (catalog data by curve kind)."""
    return model.curve(flag).a_value


def a_point(pt: PointSpec) -> Fraction:
    return pt.a_point


def weighted_flag(model: SurfaceModel) -> bool:
    exc = model.exceptional()
    return exc is not None and exc.kind == KIND_WEIGHTED
