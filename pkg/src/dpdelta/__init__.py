"""Exact rational delta-invariants of Du Val del Pezzo surfaces of degree >= 4.

The package recomputes, over a data-driven catalog of negative-curve
intersection lattices, the parametric Zariski decompositions, the
normalized volume integrals S, the refined point densities S(C;P), and
the local/global delta bounds they produce, entirely in exact rational
arithmetic.
"""

from .data import base_models, builtin_model, builtin_models
from .delta import DeltaResult, global_delta, local_delta, verify_table
from .invariants import flag_profile, s_divisor, s_flag_point, tau
from .lattice import DivisorExpr, GramMatrix, is_negative_definite, solve_gram
from .model import (
    CurveInfo,
    PointSpec,
    SurfaceModel,
    load_catalog,
    load_model,
    model_from_dict,
    model_to_dict,
    validate_model,
)
from .rational import Rat, parse_rational, render_rational
from .zariski import (
    ZariskiProfile,
    ZariskiSegment,
    decompose_at,
    parametric_profile,
    volume_at,
)

__all__ = [
    "Rat",
    "parse_rational",
    "render_rational",
    "DivisorExpr",
    "GramMatrix",
    "is_negative_definite",
    "solve_gram",
    "CurveInfo",
    "PointSpec",
    "SurfaceModel",
    "validate_model",
    "model_to_dict",
    "model_from_dict",
    "load_model",
    "load_catalog",
    "builtin_models",
    "builtin_model",
    "base_models",
    "decompose_at",
    "parametric_profile",
    "volume_at",
    "ZariskiProfile",
    "ZariskiSegment",
    "flag_profile",
    "tau",
    "s_divisor",
    "s_flag_point",
    "DeltaResult",
    "local_delta",
    "global_delta",
    "verify_table",
]

__version__ = "0.1.0"
