"""Exclusion radii, localization constants and certified circle extrema.

Every constant here is an explicit function of the zero/pole data. The ones
that involve a min or max of |f'/f| over a family of circles are computed by
sampling with a rigorous error bound, so a returned minimum never exceeds
the true minimum and a returned maximum is never below the true maximum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import (
    RationalFunction,
    as_point,
    degree,
    min_distance,
    multiplicity_at,
    pairwise_min_distance,
    rho,
)
from .errors import (
    CircleTouchesPoleError,
    EpsilonTooLargeError,
    PreconditionError,
    UncertifiableMinimumError,
    ValidationError,
)
from .roots import DEFAULT_TOL, RootResult, critical_points

DEFAULT_SAMPLES = 4096
MAX_SAMPLES = 2**20
K_CAP_SHRINK = 1e-9
_EPS = np.finfo(float).eps
_CHUNK = 1 << 15


def exclusion_radius(f: RationalFunction, z0) -> float:
    """Radius of a punctured ball about the zero/pole ``z0`` free of critical points.

    ``inf`` when ``z0`` is the only location (f = c (z - z0)^k).
    """
    z0 = as_point(z0)
    m = multiplicity_at(f, z0)
    if m == 0:
        raise PreconditionError(f"{z0!r} is not a zero or pole of f")
    d = min_distance(f, z0)
    if math.isinf(d):
        return math.inf
    return d * abs(m) / (d * rho(f, z0) + abs(m))


def alexander_walsh_radius(f: RationalFunction, z0) -> float:
    """The classical radius ``d_f(z0) |mult| / deg(f)``."""
    z0 = as_point(z0)
    m = multiplicity_at(f, z0)
    if m == 0:
        raise PreconditionError(f"{z0!r} is not a zero or pole of f")
    d = min_distance(f, z0)
    if math.isinf(d):
        return math.inf
    return d * abs(m) / degree(f)


def corollary1_max_rho(k: int, R: float) -> float:
    """Largest rho_h(z0) for which (z - z0)^k h has no critical point in B°(z0; R)."""
    if k == 0:
        raise PreconditionError("k must be nonzero")
    if not R > 0:
        raise PreconditionError("R must be positive")
    return abs(k) / ((abs(k) + 1) * R)


def inequality1_rho_bound(m: int, R: float, d: float) -> float:
    """``|m| (1/R - 1/d)``: rho at or below this keeps B°(z0; R) free."""
    if not (R > 0 and d > 0):
        raise PreconditionError("R and d must be positive")
    return abs(m) * (1.0 / R - 1.0 / d)


@dataclass(frozen=True)
class CircleFamily:
    centers: tuple
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "centers", tuple(as_point(c) for c in self.centers))
        if not self.radius > 0:
            raise PreconditionError("circle radius must be positive")


@dataclass(frozen=True)
class CertifiedExtremum:
    """``value`` bounds the true extremum from the safe side: below it for a
    min, above it for a max. ``sampled`` is the raw extremum over samples."""

    value: float
    kind: str
    lipschitz_bound: float
    sample_count: int
    certified: bool
    sampled: float = math.nan


def circle_gap(f: RationalFunction, circles: CircleFamily) -> float:
    """Distance between the union of circles and the nearest zero/pole."""
    gap = math.inf
    for c in circles.centers:
        for w in f.locations:
            gap = min(gap, abs(abs(c - w) - circles.radius))
    return gap


def _circle_bounds(locs, mults, center, radius, samples, lip):
    """Per-circle (sampled min, sampled max, certified min, certified max)."""
    h = math.pi * radius / samples  # half the arc spacing
    absm = np.abs(mults)
    smin, smax = math.inf, -math.inf
    cmin, cmax = math.inf, -math.inf
    for start in range(0, samples, _CHUNK):
        j = np.arange(start, min(samples, start + _CHUNK))
        u = np.exp(2j * np.pi * j / samples)
        z = center + radius * u
        diff = z[:, None] - locs[None, :]
        dist = np.abs(diff)
        inv = 1.0 / diff
        inv2 = inv * inv
        g0 = inv @ mults
        f1 = -(inv2 @ mults)
        f2 = 2.0 * ((inv2 * inv) @ mults)
        vals = np.abs(g0)
        smin = min(smin, float(vals.min()))
        smax = max(smax, float(vals.max()))

        # first order: |d/ds |G|| <= sum |m| / gap^2 along the arc
        lo1 = vals - lip * h
        hi1 = vals + lip * h

        # second-order Taylor in arc length with a third-derivative remainder
        t1 = 1j * u
        t2 = -u / radius
        g1 = f1 * t1
        g2 = f2 * t1 * t1 + f1 * t2
        A = vals * vals
        B = 2.0 * np.real(np.conj(g0) * g1)
        C = np.abs(g1) ** 2 + np.real(np.conj(g0) * g2)
        E = h**3 * np.abs(np.real(np.conj(g1) * g2)) + h**4 * np.abs(g2) ** 2 / 4.0
        ends_lo = np.minimum(A - B * h + C * h * h, A + B * h + C * h * h)
        ends_hi = np.maximum(A - B * h + C * h * h, A + B * h + C * h * h)
        with np.errstate(divide="ignore", invalid="ignore"):
            tv = np.where(C != 0, -B / (2.0 * C), 0.0)
        inside = (C != 0) & (np.abs(tv) < h)
        pv = A + B * tv + C * tv * tv
        pmin = np.where(inside, np.minimum(ends_lo, pv), ends_lo)
        pmax = np.where(inside, np.maximum(ends_hi, pv), ends_hi)
        clear = dist - h
        ok = np.all(clear > 0, axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            cl = np.where(clear > 0, clear, np.inf)
            c3 = (
                6.0 / cl**4 + 6.0 / (cl**3 * radius) + 1.0 / (cl**2 * radius**2)
            ) @ absm
        rem = c3 * h**3 / 6.0
        hi3 = np.sqrt(np.maximum(pmax + E, 0.0)) + rem
        lo3 = np.sqrt(np.maximum(pmin - E, 0.0)) - rem
        hi3 = np.where(ok, hi3, np.inf)
        lo3 = np.where(ok, lo3, -np.inf)

        rnd = 64.0 * _EPS * ((1.0 / dist) @ absm)
        hi = np.minimum(hi1, hi3) + rnd
        lo = np.maximum(lo1, lo3) - rnd
        cmin = min(cmin, float(lo.min()))
        cmax = max(cmax, float(hi.max()))
    return smin, smax, cmin, cmax


def circle_extremum(
    f: RationalFunction,
    circles: CircleFamily,
    kind: str,
    samples_per_circle: int = DEFAULT_SAMPLES,
) -> CertifiedExtremum:
    """Certified min or max of ``|f'/f|`` over a union of equal circles.

    ``|f'/f|`` is sampled at equispaced points on each circle. Each sample
    covers the arc within half a spacing of it, and the extremum over that
    arc is bounded two ways, keeping the tighter one:

    * first order, with the Lipschitz constant ``sum |m_i| / gap^2``;
    * a quadratic Taylor model in arc length whose remainder uses
      ``|f^(j)(z)| <= j! sum |m_i| / |z - w_i|^(j+1)``.
    """
    if kind not in ("min", "max"):
        raise ValueError(f"kind must be 'min' or 'max', got {kind!r}")
    if samples_per_circle < 1:
        raise ValueError("samples_per_circle must be positive")
    gap = circle_gap(f, circles)
    if not gap > 0:
        raise CircleTouchesPoleError(
            f"a circle of radius {circles.radius!r} passes through a zero or pole"
        )
    if len(f) == 0 or len(circles.centers) == 0:
        # f'/f vanishes identically
        return CertifiedExtremum(0.0, kind, 0.0, samples_per_circle, kind == "max", 0.0)
    locs = np.asarray(f.locations, dtype=complex)
    mults = np.asarray(f.multiplicities, dtype=float)
    lip = float(np.abs(mults).sum()) / gap**2
    smin, smax, cmin, cmax = math.inf, -math.inf, math.inf, -math.inf
    for c in circles.centers:
        a, b, lo, hi = _circle_bounds(locs, mults, c, circles.radius, samples_per_circle, lip)
        smin, smax = min(smin, a), max(smax, b)
        cmin, cmax = min(cmin, lo), max(cmax, hi)
    if kind == "min":
        return CertifiedExtremum(cmin, "min", lip, samples_per_circle, cmin > 0, smin)
    return CertifiedExtremum(cmax, "max", lip, samples_per_circle, math.isfinite(cmax), smax)


def certified_min(
    f: RationalFunction, circles: CircleFamily, samples: int = DEFAULT_SAMPLES
) -> CertifiedExtremum:
    """Certified minimum, doubling the sample count until it is positive.

    Raises :class:`UncertifiableMinimumError` past ``MAX_SAMPLES``.
    """
    s = samples
    while True:
        ext = circle_extremum(f, circles, "min", s)
        if ext.certified:
            return ext
        if s >= MAX_SAMPLES:
            raise UncertifiableMinimumError(
                f"minimum of |f'/f| not certified positive at {s} samples per circle "
                f"(sampled min {ext.sampled:.3e})"
            )
        s = min(2 * s, MAX_SAMPLES)


def _critical_locations(f: RationalFunction, crit: RootResult | None, tol: float):
    if len(f) == 0:
        return []
    if crit is None:
        crit = critical_points(f, tol)
    return crit.locations


def theorem2_points(g: RationalFunction, crit: RootResult | None = None, tol=DEFAULT_TOL):
    """Zeros, poles and finite non-trivial critical points of ``g``."""
    return list(g.locations) + _critical_locations(g, crit, tol)


def theorem2_validate(
    g: RationalFunction, R: float, eps: float, crit: RootResult | None = None,
    tol: float = DEFAULT_TOL,
) -> bool:
    """Whether ``eps`` is small and ``R`` large enough for the far-perturbation
    result: eps below half the minimum spacing of the points of g, eps < R,
    and every point inside B(0; R - eps)."""
    if len(g) == 0:
        raise PreconditionError("g must have at least one zero or pole")
    pts = theorem2_points(g, crit, tol)
    if not eps < 0.5 * pairwise_min_distance(pts):
        return False
    if not eps < R:
        return False
    return all(abs(w) < R - eps for w in pts)


@dataclass(frozen=True)
class Theorem2Constant:
    K: float
    cap: float
    eps_circles: CertifiedExtremum
    outer_circle: CertifiedExtremum


def theorem2_constant(
    g: RationalFunction, R: float, eps: float, samples: int = DEFAULT_SAMPLES,
    crit: RootResult | None = None, tol: float = DEFAULT_TOL,
) -> Theorem2Constant:
    if crit is None:
        crit = critical_points(g, tol)
    if not theorem2_validate(g, R, eps, crit):
        raise ValidationError(f"(R={R!r}, eps={eps!r}) fail the separation conditions for g")
    pts = theorem2_points(g, crit)
    inner = certified_min(g, CircleFamily(tuple(pts), eps), samples)
    outer = certified_min(g, CircleFamily((0j,), R), samples)
    cap = (1.0 / (2.0 * R)) * (1.0 - K_CAP_SHRINK)
    K = min(min(inner.value, outer.value) / 2.0, cap)
    return Theorem2Constant(K, cap, inner, outer)


def theorem2_K(
    g: RationalFunction, R: float, eps: float, samples: int = DEFAULT_SAMPLES
) -> float:
    """A valid constant K: any far factor h with rho_h(0) < K keeps the
    critical structure of g inside B(0; R)."""
    return theorem2_constant(g, R, eps, samples).K


def theorem3_L(n: int, R: float, eps: float) -> float:
    """Closed-form constant for monic degree-``n`` polynomials with zeros in the unit disk."""
    if n < 1:
        raise PreconditionError("n must be a positive integer")
    if not R > 1:
        raise PreconditionError("R must exceed 1")
    if not eps > 0:
        raise PreconditionError("eps must be positive")
    iota = eps / (2 * (2 * n - 1))
    base = 0.5 * n * iota ** (n - 1) / (2 + iota) ** n
    far_cap = 1.0 / (2 + iota)
    outer_cap = 0.5 * n * (R - 1) / ((R + 1) ** 2 + 1)
    return min(base, far_cap, outer_cap)


@dataclass(frozen=True)
class Theorem4Constant:
    n: int
    M: CertifiedExtremum
    m: CertifiedExtremum
    points: list = field(default_factory=list)


def theorem4_points(
    g: RationalFunction, h: RationalFunction,
    g_crit: RootResult | None = None, h_crit: RootResult | None = None,
    tol: float = DEFAULT_TOL,
) -> list[complex]:
    """Zeros, poles and critical points of both g and h, as a set (a point
    shared by g and h appears once)."""
    pts = (
        list(g.locations) + _critical_locations(g, g_crit, tol)
        + list(h.locations) + _critical_locations(h, h_crit, tol)
    )
    return list(dict.fromkeys(pts))


def theorem4_constants(
    g: RationalFunction, h: RationalFunction, eps: float,
    samples: int = DEFAULT_SAMPLES,
    g_crit: RootResult | None = None, h_crit: RootResult | None = None,
    tol: float = DEFAULT_TOL,
) -> Theorem4Constant:
    if len(h) == 0:
        raise PreconditionError("h must be non-constant")
    pts = theorem4_points(g, h, g_crit, h_crit, tol)
    sep = pairwise_min_distance(pts)
    if not eps < sep:
        raise EpsilonTooLargeError(
            f"eps={eps!r} is not below the minimum point spacing {sep!r}"
        )
    circles = CircleFamily(tuple(pts), eps)
    M = circle_extremum(g, circles, "max", samples)
    m = certified_min(h, circles, samples)
    n = math.floor(M.value / m.value) + 1
    # float guard so that (n - 1) m <= M < n m holds as computed
    while n * m.value <= M.value:
        n += 1
    while n > 1 and (n - 1) * m.value > M.value:
        n -= 1
    return Theorem4Constant(n, M, m, pts)


def theorem4_threshold(
    g: RationalFunction, h: RationalFunction, eps: float, samples: int = DEFAULT_SAMPLES
) -> int:
    """Least n with n*m > M, where M bounds |g'/g| and m bounds |h'/h| from
    below on the eps-circles around all special points of g and h."""
    return theorem4_constants(g, h, eps, samples).n
