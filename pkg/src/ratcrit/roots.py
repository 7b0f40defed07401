"""Simultaneous-iteration polynomial root finder used as the verification oracle.

Aberth-Ehrlich iteration: every approximation takes a Newton step corrected
for repulsion from all the others. Starting points come from the Newton
polygon of the coefficient magnitudes, which places one ring of guesses per
scale of root moduli; that matters here because the products built by the
verification suites mix roots of size ~1 with roots of size 1e10 and beyond.

No randomness, fixed iteration order: two runs on the same input give
bit-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import RationalFunction
from .errors import EmptyFunctionError, NonConvergenceError, ZeroPolynomialError
from .polyops import Polynomial, log_derivative, partial_fraction_sum

EPS = np.finfo(float).eps
# fixed angular offset, irrational in units of 2*pi
ANGLE_OFFSET = 0.7
DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITERS = 1000


@dataclass
class RootResult:
    roots: list = field(default_factory=list)  # (location, multiplicity)
    residuals: list = field(default_factory=list)
    deficiency_at_infinity: int = 0

    @property
    def locations(self) -> list[complex]:
        return [r for r, _ in self.roots]

    @property
    def finite_count(self) -> int:
        return sum(m for _, m in self.roots)

    @property
    def total_count(self) -> int:
        return self.finite_count + self.deficiency_at_infinity

    def expanded(self) -> list[complex]:
        """Locations repeated according to multiplicity."""
        return [r for r, m in self.roots for _ in range(m)]


def _upper_hull(xs, ys):
    hull = []
    for x, y in zip(xs, ys):
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly above the chord
            if (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append((x, y))
    return hull


def _initial_guesses(c: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    idx = [i for i in range(n + 1) if c[i] != 0]
    logs = [math.log(abs(c[i])) for i in idx]
    hull = _upper_hull(idx, logs)
    z = np.empty(n, dtype=complex)
    pos = 0
    for (i0, y0), (i1, y1) in zip(hull[:-1], hull[1:]):
        m = i1 - i0
        u = math.exp((y0 - y1) / m)
        for j in range(m):
            ang = 2 * math.pi * j / m + 2 * math.pi * i0 / n + ANGLE_OFFSET
            z[pos] = u * complex(math.cos(ang), math.sin(ang))
            pos += 1
    return z


def _horner3(c: np.ndarray, x: np.ndarray):
    """p(x), p'(x) and the running-error bound sum |c_i| |x|^i."""
    p = np.zeros_like(x)
    dp = np.zeros_like(x)
    ax = np.abs(x)
    bound = np.zeros(x.shape)
    for a in c[::-1]:
        dp = dp * x + p
        p = p * x + a
        bound = bound * ax + abs(a)
    return p, dp, bound


def _newton_step(c: np.ndarray, z: np.ndarray):
    """Newton correction p/p' and a flag for residuals at rounding level.

    For |z| > 1 the reversed polynomial in 1/z is used so nothing overflows.
    """
    n = len(c) - 1
    ratio = np.empty_like(z)
    noise = np.empty(z.shape, dtype=bool)
    inner = np.abs(z) <= 1
    if inner.any():
        zi = z[inner]
        p, dp, b = _horner3(c, zi)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio[inner] = p / dp
        noise[inner] = np.abs(p) <= 4 * n * EPS * b
    outer = ~inner
    if outer.any():
        zo = z[outer]
        y = 1.0 / zo
        r, dr, b = _horner3(c[::-1], y)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio[outer] = zo * r / (n * r - y * dr)
        noise[outer] = np.abs(r) <= 4 * n * EPS * b
    return ratio, noise


def _scaled_residual(c: np.ndarray, z: complex) -> float:
    """|p(z)| / (max|c| * max(1, |z|)^deg)."""
    scale = np.max(np.abs(c))
    if abs(z) <= 1:
        val = 0j
        for a in c[::-1]:
            val = val * z + a
    else:
        y = 1 / z
        val = 0j
        for a in c:
            val = val * y + a
    return abs(val) / scale


def _log_abs_eval(c: np.ndarray, z: complex) -> float:
    n = len(c) - 1
    if abs(z) <= 1:
        val = 0j
        for a in c[::-1]:
            val = val * z + a
        return math.log(abs(val)) if val != 0 else -math.inf
    y = 1 / z
    val = 0j
    for a in c:
        val = val * y + a
    if val == 0:
        return -math.inf
    return math.log(abs(val)) + n * math.log(abs(z))


def _aberth(c: np.ndarray, max_iters: int):
    n = len(c) - 1
    if n == 1:
        return np.array([-c[0] / c[1]]), True
    z = _initial_guesses(c)
    active = np.ones(n, dtype=bool)
    for _ in range(max_iters):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            return z, True
        ratio, noise = _newton_step(c, z[idx])
        diff = z[idx, None] - z[None, :]
        diff[np.arange(idx.size), idx] = 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            inv = 1.0 / diff
        inv[np.arange(idx.size), idx] = 0.0
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            w = ratio / (1.0 - ratio * s)
        bad = ~np.isfinite(w)
        w[bad] = 0.0
        # residual already at rounding level: further steps only add noise
        w[noise] = 0.0
        z[idx] = z[idx] - w
        tiny = np.abs(w) <= 2 * EPS * np.abs(z[idx])
        active[idx[noise | tiny]] = False
    return z, not active.any()


def _inclusion_radii(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Weierstrass-type inclusion radii n * |p(z_i) / (a_n prod_{j!=i}(z_i - z_j))|.

    Overlapping discs flag approximations of one multiple root. Computed in
    log space so products over far-apart roots cannot overflow.
    """
    n = len(z)
    out = np.zeros(n)
    log_lead = math.log(abs(c[-1]))
    for i in range(n):
        lp = _log_abs_eval(c, complex(z[i]))
        if lp == -math.inf:
            continue
        lprod = 0.0
        for j in range(n):
            if j != i:
                d = abs(z[i] - z[j])
                if d == 0:
                    lprod = -math.inf
                    break
                lprod += math.log(d)
        if lprod == -math.inf:
            out[i] = math.inf
            continue
        out[i] = n * math.exp(min(lp - log_lead - lprod, 700.0))
    return out


def _refine_multiple(c: np.ndarray, z0: complex, m: int, spread: float) -> complex:
    """Sharpen the centroid of an m-point cluster.

    Frozen approximations of an m-fold root scatter over a radius ~eps^(1/m),
    so their mean is no better than that. The root is simple for the
    (m-1)-th derivative, where Newton converges quadratically.
    """
    d = np.asarray(c, dtype=complex)
    for _ in range(m - 1):
        d = d[1:] * np.arange(1, len(d))
    dd = d[1:] * np.arange(1, len(d))
    z = z0
    limit = 2 * spread + 4 * EPS * max(1.0, abs(z0))
    for _ in range(16):
        p = 0j
        for a in d[::-1]:
            p = p * z + a
        dp = 0j
        for a in dd[::-1]:
            dp = dp * z + a
        if dp == 0:
            break
        step = p / dp
        cand = z - step
        if not (abs(cand - z0) <= limit) or not np.isfinite(cand):
            break
        z = cand
        if abs(step) <= 2 * EPS * max(1.0, abs(z)):
            break
    return complex(z)


def _single_linkage(raw: Sequence[complex], linked) -> list[list[int]]:
    n = len(raw)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if linked(i, j):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]


def _cluster_groups(raw: list[complex], radius: float, inclusion, relative: bool):
    def linked(i, j):
        d = abs(raw[i] - raw[j])
        scale = max(1.0, abs(raw[i]), abs(raw[j])) if relative else 1.0
        if d <= radius * scale:
            return True
        return inclusion is not None and d <= inclusion[i] + inclusion[j]

    return _single_linkage(raw, linked)


def cluster_roots(
    raw: Sequence[complex], radius: float, inclusion=None, relative: bool = False
) -> list:
    """Single-linkage clustering at linkage distance ``radius``.

    Returns ``(centroid, size)`` pairs. With ``relative`` the distance scales
    by ``max(1, |z_i|, |z_j|)``; with ``inclusion`` (per-point disc radii) two
    points are also linked when their discs overlap.
    """
    if radius <= 0:
        raise ValueError("cluster radius must be positive")
    raw = [complex(r) for r in raw]
    return [
        (complex(sum(raw[i] for i in g) / len(g)), len(g))
        for g in _cluster_groups(raw, radius, inclusion, relative)
    ]


def find_roots(
    p: Polynomial, tol: float = DEFAULT_TOL, max_iters: int = DEFAULT_MAX_ITERS
) -> RootResult:
    """All ``deg(p)`` roots of ``p`` with multiplicities and residual certificates.

    The residual reported for a root r is ``|p(r)| / (max|a_i| max(1,|r|)^deg)``
    and every one is at most ``tol``; otherwise :class:`NonConvergenceError`.
    """
    if p.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no finite root set")
    c = np.asarray(p.coefficients, dtype=complex)
    c = c / np.max(np.abs(c))
    n = len(c) - 1
    if n == 0:
        return RootResult()
    # exact zero low-order coefficients are roots at the origin
    s = int(np.flatnonzero(c)[0])
    raw = [0j] * s
    incl = [0.0] * s
    if n - s > 0:
        q = c[s:]
        z, converged = _aberth(q, max_iters)
        raw.extend(complex(v) for v in z)
        incl.extend(_inclusion_radii(q, z))
    incl = np.asarray(incl)

    rawc = [complex(v) for v in raw]
    roots = []
    for g in _cluster_groups(rawc, math.sqrt(tol), incl, relative=True):
        centroid = sum(rawc[i] for i in g) / len(g)
        if len(g) > 1:
            spread = max(abs(rawc[i] - centroid) for i in g)
            centroid = _refine_multiple(c, centroid, len(g), spread)
        roots.append((complex(centroid), len(g)))
    residuals = [_scaled_residual(c, r) for r, _ in roots]
    if any(not (res <= tol) for res in residuals):
        raise NonConvergenceError(
            f"root residual certificate failed (max {max(residuals):.3e} > {tol:.1e})",
            iterate=rawc,
            residuals=residuals,
        )
    order = sorted(range(len(roots)), key=lambda i: (roots[i][0].real, roots[i][0].imag))
    return RootResult([roots[i] for i in order], [residuals[i] for i in order], 0)


def _polish(f: RationalFunction, r: complex, steps: int = 4) -> complex:
    """Newton on sum m_i/(z - w_i) for a simple critical point; keeps a step
    only if it lowers the residual."""
    best = r
    best_res = abs(partial_fraction_sum(f, r))
    for _ in range(steps):
        val = 0j
        der = 0j
        for pt in f.points:
            t = 1.0 / (best - pt.location)
            val += pt.multiplicity * t
            der -= pt.multiplicity * t * t
        if der == 0:
            break
        cand = best - val / der
        if not (math.isfinite(cand.real) and math.isfinite(cand.imag)):
            break
        if cand in f.locations:
            break
        res = abs(partial_fraction_sum(f, cand))
        if res < best_res:
            best, best_res = cand, res
        else:
            break
    return best


def critical_points(
    f: RationalFunction, tol: float = DEFAULT_TOL, max_iters: int = DEFAULT_MAX_ITERS
) -> RootResult:
    """Non-trivial critical points of ``f``: the roots of the numerator of f'/f.

    ``deficiency_at_infinity`` counts the critical points the sphere count
    ``k - 1`` places at infinity (nonzero exactly when the multiplicities sum
    to zero). Residuals are ``|sum m_i/(r - w_i)|`` at each reported point.
    """
    if len(f) == 0:
        raise EmptyFunctionError("constant function has no critical-point structure")
    ld = log_derivative(f)
    num = ld.numerator.normalized()
    found = find_roots(num, tol, max_iters)
    roots = []
    for r, m in found.roots:
        if m == 1:
            r = _polish(f, r)
        roots.append((r, m))
    residuals = [abs(partial_fraction_sum(f, r)) for r, _ in roots]
    deficiency = (len(f) - 1) - num.degree
    return RootResult(roots, residuals, deficiency)
