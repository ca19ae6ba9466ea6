"""Zariski decomposition along a ray D(v) = A - v*B on a surface model.

Two entry points:

* ``decompose_at`` -- the fixed-v fixpoint solver.  Starting from an empty
  support it repeatedly adds every curve that the current positive part
  meets negatively and re-solves the coefficients so that P.C = 0 on the
  support, until the positive part is nef against all catalog curves.

* ``parametric_profile`` -- walks the ray from v = 0 up to the threshold
  where the volume vanishes, producing exact segments.  On each segment the
  support is constant, so the negative-part coefficients are affine in v
  and the volume polynomial quadratic; segment ends are rational roots of
  those functions.  The support for a segment is probed strictly inside it
  (midpoint probe, re-derived until stable), which sidesteps the ambiguity
  of supports at breakpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import DivisorExpr, is_negative_definite, solve_gram
from .model import SurfaceModel
from .poly import IrrationalRootError, Poly
from .rational import rat

__all__ = [
    "ZariskiError",
    "ZariskiSegment",
    "ZariskiProfile",
    "decompose_at",
    "parametric_profile",
    "volume_at",
]


class ZariskiError(RuntimeError):
    """Non-convergence: ray left the pseudo-effective cone or bad catalog."""


def decompose_at(
    model: SurfaceModel, d: DivisorExpr
) -> tuple[DivisorExpr, dict[int, Fraction]]:
    """Zariski decomposition of a single divisor.

    Returns (P, N) with N as a map curve-index -> coefficient.  P satisfies
    P.C >= 0 for all model curves and P.C = 0 on the support of N; the
    support always has negative-definite Gram matrix.
    """
    g = model.gram
    curve_indices = list(range(1, model.dim))
    support: list[int] = []
    coeffs: dict[int, Fraction] = {}
    cap = len(curve_indices) + 1
    for _ in range(cap):
        p = d
        for i, c in coeffs.items():
            p = p - DivisorExpr.basis(i, model.dim).scaled(c)
        bad = [
            i
            for i in curve_indices
            if i not in coeffs and g.pair(p, DivisorExpr.basis(i, model.dim)) < 0
        ]
        if not bad:
            if any(c < 0 for c in coeffs.values()):
                raise ZariskiError(
                    f"{model.name}: negative part coefficients went negative; "
                    "divisor outside the pseudo-effective cone?"
                )
            return p, {i: c for i, c in coeffs.items() if c}
        support = sorted(set(support) | set(bad))
        if not is_negative_definite(g, support):
            raise ZariskiError(
                f"{model.name}: candidate support {support} is not negative "
                "definite; divisor outside the pseudo-effective cone?"
            )
        rhs = [g.pair(d, DivisorExpr.basis(i, model.dim)) for i in support]
        sol = solve_gram(g, support, rhs)
        coeffs = dict(zip(support, sol))
    raise ZariskiError(
        f"{model.name}: Zariski fixpoint did not converge in {cap} rounds"
    )


@dataclass(frozen=True)
class ZariskiSegment:
    v_lo: Fraction
    v_hi: Fraction
    support: tuple[int, ...]
    coeff: dict[int, Poly]  # affine in v, keyed by curve index
    psq: Poly  # P(v)^2, quadratic
    pdot: dict[int, Poly]  # P(v).C for every curve index, affine


@dataclass(frozen=True)
class ZariskiProfile:
    model_name: str
    flag: str
    segments: tuple[ZariskiSegment, ...]
    tau: Fraction

    def segment_at(self, v: Fraction) -> ZariskiSegment:
        for seg in self.segments:
            if seg.v_lo <= v <= seg.v_hi:
                return seg
        raise ValueError(f"v={v} outside [0, {self.tau}]")


def _affine_solution(
    model: SurfaceModel, a: DivisorExpr, b: DivisorExpr, support: list[int]
) -> dict[int, tuple[Fraction, Fraction]]:
    """Coefficients of N on a fixed support for D(v) = a - v*b.

    The linear system G x = rhs(v) has an affine right-hand side, so the
    solution splits as x(v) = x0 + v*x1 with two constant solves.
    """
    g = model.gram
    basis = [DivisorExpr.basis(i, model.dim) for i in support]
    rhs0 = [g.pair(a, e) for e in basis]
    rhs1 = [-g.pair(b, e) for e in basis]
    x0 = solve_gram(g, support, rhs0)
    x1 = solve_gram(g, support, rhs1)
    return {i: (x0[k], x1[k]) for k, i in enumerate(support)}


def _build_segment_data(
    model: SurfaceModel,
    a: DivisorExpr,
    b: DivisorExpr,
    support: list[int],
):
    """Affine coefficient, pdot and quadratic psq data for a fixed support."""
    g = model.gram
    coeff = _affine_solution(model, a, b, support)
    support_set = set(support)
    pdot: dict[int, Poly] = {}
    for i in range(1, model.dim):
        e = DivisorExpr.basis(i, model.dim)
        c0 = g.pair(a, e)
        c1 = -g.pair(b, e)
        for j, (x0, x1) in coeff.items():
            gij = g[j, i]
            c0 -= x0 * gij
            c1 -= x1 * gij
        pdot[i] = Poly.of(c0, c1) if i not in support_set else Poly.of()
    # P.a and P.b are affine; psq = P.(a - v b) is quadratic.
    pa0, pa1 = g.pair(a, a), -g.pair(b, a)
    pb0, pb1 = g.pair(a, b), -g.pair(b, b)
    for j, (x0, x1) in coeff.items():
        e = DivisorExpr.basis(j, model.dim)
        gja, gjb = g.pair(e, a), g.pair(e, b)
        pa0 -= x0 * gja
        pa1 -= x1 * gja
        pb0 -= x0 * gjb
        pb1 -= x1 * gjb
    psq = Poly.of(pa0, pa1) - Poly.of(0, 1) * Poly.of(pb0, pb1)
    coeff_polys = {i: Poly.of(x0, x1) for i, (x0, x1) in coeff.items()}
    return coeff_polys, pdot, psq


def _next_event(
    support: list[int],
    coeff: dict[int, Poly],
    pdot: dict[int, Poly],
    psq: Poly,
    v0: Fraction,
) -> tuple[Fraction, bool]:
    """Earliest breakpoint strictly beyond v0 and whether it ends the walk.

    Candidates: a supported coefficient hitting zero from above, an
    unsupported curve's P.C hitting zero while decreasing, and the
    smallest root of the volume polynomial.  The volume root terminates
    the profile whenever nothing happens strictly before it.
    """
    candidates: list[Fraction] = []
    for i in support:
        c = coeff[i]
        if c.degree() >= 1 and c.coeffs[1] < 0:
            r = -c.coeffs[0] / c.coeffs[1]
            if r > v0:
                candidates.append(r)
    for i, p in pdot.items():
        if p.degree() >= 1 and p.coeffs[1] < 0:
            r = -p.coeffs[0] / p.coeffs[1]
            if r > v0:
                candidates.append(r)
    # The volume quadratic may have irrational roots when the segment is
    # cut short by a support change; only when no earlier event exists is
    # a rational root required (every catalog threshold is rational).
    try:
        vol_roots = [r for r in psq.roots() if r > v0]
    except IrrationalRootError:
        if candidates:
            return min(candidates), False
        raise
    tau_candidate = min(vol_roots) if vol_roots else None
    if tau_candidate is None:
        if not candidates:
            raise ZariskiError("ray never reaches zero volume (malformed ray)")
        return min(candidates), False
    if candidates and min(candidates) < tau_candidate:
        return min(candidates), False
    return tau_candidate, True


def _valid_at(
    support: list[int], coeff: dict[int, Poly], pdot: dict[int, Poly], v: Fraction
) -> bool:
    return all(coeff[i](v) >= 0 for i in support) and all(
        p(v) >= 0 for p in pdot.values() if not p.is_zero()
    )


def parametric_profile(
    model: SurfaceModel, a: DivisorExpr, b: DivisorExpr
) -> ZariskiProfile:
    """Full segment structure of D(v) = a - v*b on [0, tau].

    Each segment's support is taken from a probe decomposition strictly
    inside it.  The affine data built on that support is then certified on
    [v0, v1]: every constraint (coefficients nonnegative, positive part
    nef) is affine in v, so holding at both endpoints proves the segment
    exactly.  A probe landing beyond the segment (or beyond the threshold)
    is detected by a failed endpoint check and shrunk toward v0.
    """
    g = model.gram
    if g.pair(a, a) <= 0:
        raise ZariskiError(f"{model.name}: ray origin has non-positive square")
    flag_name = next(
        (c.name for c in model.curves if b.coeff(model.curve_index(c.name)) == 1),
        "?",
    )
    segments: list[ZariskiSegment] = []
    v0 = Fraction(0)
    guard = 4 * model.dim
    shrink_cap = 64
    for _ in range(guard):
        step = Fraction(1)
        accepted = None
        for _ in range(shrink_cap):
            probe = v0 + step
            try:
                _, n_probe = decompose_at(model, a - b.scaled(probe))
            except ZariskiError:
                step = step / 2
                continue
            support = sorted(n_probe)
            coeff, pdot, psq = _build_segment_data(model, a, b, support)
            if not _valid_at(support, coeff, pdot, v0):
                step = step / 2  # probe overshot into a later segment
                continue
            try:
                v1, terminal = _next_event(support, coeff, pdot, psq, v0)
            except IrrationalRootError as exc:
                raise ZariskiError(
                    f"{model.name}, flag {flag_name}: non-rational threshold "
                    f"detected ({exc}); catalog transcription error?"
                ) from exc
            if probe > v1:
                step = (v1 - v0) / 2  # land strictly inside [v0, v1]
                continue
            accepted = (support, coeff, pdot, psq, v1, terminal)
            break
        if accepted is None:
            raise ZariskiError(
                f"{model.name}, flag {flag_name}: probing did not stabilize "
                f"beyond v = {v0}"
            )
        support, coeff, pdot, psq, v1, terminal = accepted
        if psq(v0) < 0 or psq(v1) < 0:
            raise ZariskiError(
                f"{model.name}, flag {flag_name}: volume went negative on "
                f"[{v0}, {v1}]"
            )
        segments.append(
            ZariskiSegment(
                v_lo=v0,
                v_hi=v1,
                support=tuple(support),
                coeff=coeff,
                psq=psq,
                pdot=pdot,
            )
        )
        if terminal:
            return ZariskiProfile(model.name, flag_name, tuple(segments), v1)
        v0 = v1
    raise ZariskiError(
        f"{model.name}, flag {flag_name}: walker exceeded {guard} segments"
    )


def volume_at(profile: ZariskiProfile, v) -> Fraction:
    """Evaluate P(v)^2 at a point of [0, tau]."""
    x = rat(v)
    if x < 0 or x > profile.tau:
        raise ValueError(f"v={x} outside [0, {profile.tau}]")
    return profile.segment_at(x).psq(x)
