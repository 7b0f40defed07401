"""Check each localization result against the root-finding oracle.

Every ``check_*`` function builds the function the result talks about, asks
the oracle for its critical points, and returns a :class:`TrialRecord` whose
status is one of

* ``pass`` / ``fail``: the conclusion held / was violated;
* ``skipped``: the instance does not meet the result's hypotheses;
* ``inconclusive``: the oracle or a certificate could not deliver trustworthy
  data (solver weakness is never reported as a counterexample).

``run_suite`` drives a check over a seeded random ensemble.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from . import bounds
from .core import (
    RationalFunction,
    WeightedPoint,
    as_point,
    min_distance,
    multiplicity_at,
    pairwise_min_distance,
    rho,
    rho_continuity_bound,
)
from .document import function_to_document
from .errors import (
    DuplicateLocationError,
    EpsilonTooLargeError,
    NonConvergenceError,
    OverlappingCentersError,
    PreconditionError,
    SeparationError,
    UncertifiableMinimumError,
    ValidationError,
)
from .polyops import log_derivative, poly_eval
from .roots import RootResult, critical_points

THEOREMS = ("thm1", "cor1", "thm2", "thm3", "thm4", "lemma1", "lemma2", "remark_count")
STATUSES = ("pass", "fail", "skipped", "inconclusive")
MAX_REDRAWS = 10_000
DEFAULT_TOL = 1e-9
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class EnsembleConfig:
    seed: int = 42
    trials: int = 100
    points_min: int = 2
    points_max: int = 8
    annulus_inner: float = 0.1
    annulus_outer: float = 1.0
    mult_max: int = 3
    allow_poles: bool = True
    min_separation: float = 0.05

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValidationError("seed must be an unsigned 64-bit integer")
        if self.trials < 1:
            raise ValidationError("trials must be positive")
        if not 1 <= self.points_min <= self.points_max:
            raise ValidationError("need 1 <= points_min <= points_max")
        if not 0 < self.annulus_inner < self.annulus_outer:
            raise ValidationError("need 0 < annulus_inner < annulus_outer")
        if self.mult_max < 1:
            raise ValidationError("mult_max must be positive")
        if not self.min_separation > 0:
            raise ValidationError("min_separation must be positive")


@dataclass
class TrialRecord:
    """One theorem check. ``margin`` is positive when the conclusion held
    with room to spare; its exact meaning is documented per check."""

    status: str
    computed_constant: float = math.nan
    oracle_count: int = 0
    margin: float = math.nan
    inputs_digest: str = ""
    index: int = 0
    note: str = ""
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class VerificationReport:
    theorem_id: str
    records: list = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(1 for r in self.records if r.status == status)

    @property
    def trials(self) -> int:
        return len(self.records)

    @property
    def failures(self) -> int:
        return self.count("fail")

    @property
    def skipped(self) -> int:
        return self.count("skipped")

    @property
    def inconclusive(self) -> int:
        return self.count("inconclusive")

    @property
    def passes(self) -> int:
        return self.count("pass")

    @property
    def min_margin(self) -> float:
        vals = [r.margin for r in self.records
                if r.status in ("pass", "fail") and not math.isnan(r.margin)]
        return min(vals) if vals else math.nan

    def summary(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "skipped": self.skipped,
            "inconclusive": self.inconclusive,
            "min_margin": self.min_margin,
        }


def digest(*parts) -> str:
    """Stable short hash of the trial inputs (functions, points, numbers)."""

    def enc(x):
        if isinstance(x, RationalFunction):
            return function_to_document(x)
        if isinstance(x, complex):
            return [x.real, x.imag]
        if isinstance(x, (list, tuple)):
            return [enc(v) for v in x]
        return x

    blob = json.dumps([enc(p) for p in parts], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


# -- ensembles -------------------------------------------------------------

def _draw_locations(rng, count, inner, outer, min_sep, existing=()):
    pts = list(existing)
    attempts = 0
    while len(pts) < len(existing) + count:
        attempts += 1
        if attempts > MAX_REDRAWS:
            raise SeparationError(
                f"could not place {count} points with separation {min_sep} "
                f"in annulus [{inner}, {outer}] after {MAX_REDRAWS} draws"
            )
        # uniform by area
        r = math.sqrt(rng.uniform(inner * inner, outer * outer))
        t = rng.uniform(0.0, 2.0 * math.pi)
        z = complex(r * math.cos(t), r * math.sin(t))
        if all(abs(z - w) >= min_sep for w in pts):
            pts.append(z)
    return pts[len(existing):]


def _draw_mults(rng, count, mult_max, allow_poles):
    out = []
    for _ in range(count):
        m = int(rng.integers(1, mult_max + 1))
        if allow_poles and rng.random() < 0.5:
            m = -m
        out.append(m)
    return out


def random_function(rng, cfg: EnsembleConfig, count=None, existing=()) -> RationalFunction:
    if count is None:
        count = int(rng.integers(cfg.points_min, cfg.points_max + 1))
    locs = _draw_locations(
        rng, count, cfg.annulus_inner, cfg.annulus_outer, cfg.min_separation, existing
    )
    mults = _draw_mults(rng, count, cfg.mult_max, cfg.allow_poles)
    return RationalFunction(tuple(WeightedPoint(z, m) for z, m in zip(locs, mults)))


def generate_ensemble(cfg: EnsembleConfig) -> list[RationalFunction]:
    """``cfg.trials`` random functions, fully determined by ``cfg.seed``."""
    rng = np.random.default_rng(cfg.seed)
    return [random_function(rng, cfg) for _ in range(cfg.trials)]


def far_function(rng, scale: float, count_max: int = 3, mult_max: int = 3,
                 allow_poles: bool = True) -> RationalFunction:
    """Random h with locations in the annulus [10 scale, 20 scale].

    With at most ``count_max * mult_max <= 9`` total multiplicity this gives
    ``rho_h(0) <= 0.9 / scale``.
    """
    count = int(rng.integers(1, count_max + 1))
    locs = _draw_locations(rng, count, 10.0 * scale, 20.0 * scale, scale)
    mults = _draw_mults(rng, count, mult_max, allow_poles)
    return RationalFunction(tuple(WeightedPoint(z, m) for z, m in zip(locs, mults)))


# -- helpers ---------------------------------------------------------------

def _oracle(f: RationalFunction, tol: float):
    """Critical points, or None when the oracle cannot certify them."""
    try:
        return critical_points(f, tol)
    except NonConvergenceError:
        return None


def all_critical_points(f: RationalFunction, crit: RootResult) -> list:
    """Every zero of f' with multiplicity: the non-trivial ones from ``crit``
    plus each zero of order m >= 2 counted m - 1 times."""
    out = list(crit.roots)
    out.extend((p.location, p.multiplicity - 1) for p in f.points if p.multiplicity >= 2)
    return out


@dataclass
class MatchReport:
    passed: bool
    counts: list
    unassigned: list
    max_offset: float = 0.0


def match_clusters(predicted, found, eps: float, mode: str = "exact") -> MatchReport:
    """Compare predicted ``(center, multiplicity)`` clusters with found roots.

    A found root is assigned to a center when it lies strictly within ``eps``.
    ``exact`` needs centers more than ``2 eps`` apart (each root then has at
    most one center) and equality of counts; ``at_least`` counts each center
    independently and needs ``count >= multiplicity``.
    """
    if mode not in ("exact", "at_least"):
        raise ValueError(f"unknown mode {mode!r}")
    roots = found.roots if isinstance(found, RootResult) else list(found)
    centers = [(as_point(c), int(m)) for c, m in predicted]
    if mode == "exact":
        sep = pairwise_min_distance([c for c, _ in centers])
        if not sep > 2 * eps:
            raise OverlappingCentersError(
                f"predicted centers {sep!r} apart, need more than 2*eps = {2 * eps!r}"
            )
    counts = [0] * len(centers)
    unassigned = []
    max_offset = 0.0
    for r, m in roots:
        hit = False
        for i, (c, _) in enumerate(centers):
            dist = abs(r - c)
            if dist < eps:
                counts[i] += m
                max_offset = max(max_offset, dist)
                hit = True
                if mode == "exact":
                    break
        if not hit:
            unassigned.append((r, m))
    if mode == "exact":
        ok = all(n == m for n, (_, m) in zip(counts, centers))
    else:
        ok = all(n >= m for n, (_, m) in zip(counts, centers))
    return MatchReport(ok, counts, unassigned, max_offset)


# -- per-result checks -----------------------------------------------------

def check_theorem1(f: RationalFunction, z0, tol: float = DEFAULT_TOL,
                   residual_tol: float = RESIDUAL_TOL) -> TrialRecord:
    """No critical point strictly inside ``radius * (1 - tol)`` of ``z0``.

    margin: (distance to the nearest critical point) / radius - 1.
    """
    z0 = as_point(z0)
    dig = digest(f, z0)
    r = bounds.exclusion_radius(f, z0)
    crit = _oracle(f, DEFAULT_TOL)
    if crit is None:
        return TrialRecord("inconclusive", r, 0, math.nan, dig, note="oracle did not converge")
    if any(res > residual_tol for res in crit.residuals):
        return TrialRecord("inconclusive", r, crit.finite_count, math.nan, dig,
                           note=f"residual {max(crit.residuals):.2e} above {residual_tol:.0e}")
    dists = [abs(c - z0) for c in crit.locations if c != z0]
    if not dists:
        return TrialRecord("pass", r, 0, math.inf, dig)
    dmin = min(dists)
    if math.isinf(r):
        return TrialRecord("fail", r, crit.finite_count, -math.inf, dig,
                           note="critical point exists but radius is infinite")
    margin = dmin / r - 1.0
    status = "pass" if dmin >= r * (1.0 - tol) else "fail"
    return TrialRecord(status, r, crit.finite_count, margin, dig,
                       details={"nearest": dmin})


def check_corollary1(z0, k: int, R: float, h: RationalFunction,
                     tol: float = DEFAULT_TOL) -> TrialRecord:
    """(z - z0)^k h has no critical point in the punctured ball B°(z0; R(1 - tol)).

    margin: (distance to the nearest critical point) / R - 1.
    """
    z0 = as_point(z0)
    dig = digest(z0, k, R, h)
    thr = bounds.corollary1_max_rho(k, R)
    if multiplicity_at(h, z0) != 0:
        return TrialRecord("skipped", thr, note="z0 is a zero or pole of h")
    if rho(h, z0) > thr:
        return TrialRecord("skipped", thr, note="rho_h(z0) above threshold")
    f = h.with_point(z0, k)
    crit = _oracle(f, DEFAULT_TOL)
    if crit is None:
        return TrialRecord("inconclusive", thr, note="oracle did not converge")
    dists = [abs(c - z0) for c in crit.locations if c != z0]
    if not dists:
        return TrialRecord("pass", thr, 0, math.inf, dig)
    dmin = min(dists)
    status = "pass" if dmin >= R * (1.0 - tol) else "fail"
    return TrialRecord(status, thr, crit.finite_count, dmin / R - 1.0, dig)


def check_theorem2(g: RationalFunction, R: float, eps: float, h: RationalFunction,
                   tol: float = DEFAULT_TOL, samples: int = bounds.DEFAULT_SAMPLES,
                   g_crit: RootResult | None = None,
                   constant: bounds.Theorem2Constant | None = None) -> TrialRecord:
    """Critical points of g*h inside B(0; R) sit within eps of those of g,
    with matching multiplicities, and none come near a zero or pole of g.

    margin: min over critical points of g*h not explained by g of |c|/R - 1
    (``inf`` if there are none).
    """
    dig = digest(g, R, eps, h)
    if g_crit is None:
        g_crit = _oracle(g, DEFAULT_TOL)
        if g_crit is None:
            return TrialRecord("inconclusive", note="oracle did not converge on g")
    if not bounds.theorem2_validate(g, R, eps, g_crit):
        return TrialRecord("skipped", inputs_digest=dig, note="eps/R conditions fail for g")
    if constant is None:
        try:
            constant = bounds.theorem2_constant(g, R, eps, samples, g_crit)
        except UncertifiableMinimumError as exc:
            return TrialRecord("inconclusive", inputs_digest=dig, note=str(exc))
    K = constant.K
    if len(h) and multiplicity_at(h, 0) != 0:
        return TrialRecord("skipped", K, inputs_digest=dig, note="h has a zero or pole at 0")
    if not rho(h, 0) < K:
        return TrialRecord("skipped", K, inputs_digest=dig, note="rho_h(0) >= K")
    try:
        gh = g.times(h)
    except DuplicateLocationError:
        return TrialRecord("skipped", K, inputs_digest=dig, note="g and h share a location")
    crit = _oracle(gh, DEFAULT_TOL)
    if crit is None:
        return TrialRecord("inconclusive", K, inputs_digest=dig, note="oracle did not converge")

    near_g = [(c, m) for c, m in crit.roots
              if any(abs(c - w) < eps for w in g.locations)]
    near_crit = [(c, m) for c, m in crit.roots
                 if any(abs(c - w) < eps for w in g_crit.locations)]
    match = match_clusters(g_crit.roots, near_crit, eps, "exact")
    explained = {complex(c) for c, _ in near_crit}
    others = [(c, m) for c, m in crit.roots if complex(c) not in explained]
    inside = [(c, m) for c, m in others if abs(c) < R * (1.0 - tol)]
    margin = min((abs(c) / R - 1.0 for c, _ in others), default=math.inf)
    ok = match.passed and not near_g and not inside
    notes = []
    if not match.passed:
        notes.append(f"cluster counts {match.counts}")
    if near_g:
        notes.append(f"{len(near_g)} critical point(s) within eps of a zero/pole of g")
    if inside:
        notes.append(f"{len(inside)} unexplained critical point(s) in B(0;R)")
    return TrialRecord("pass" if ok else "fail", K, crit.finite_count, margin, dig,
                       note="; ".join(notes))


def check_theorem3(p_zeros, R: float, eps: float, h: RationalFunction,
                   tol: float = DEFAULT_TOL) -> TrialRecord:
    """For p with zeros in the unit disk and rho_h(0) < L: at least m critical
    points of p*h within eps of each critical point of p (multiplicity m), and
    exactly n - 1 critical points of p*h in B(0; R).

    Critical points here are all zeros of the derivative, trivial ones
    included. margin: min over critical points of p*h outside B(0; R) of
    |c|/R - 1 (``inf`` if none).
    """
    zeros = [(as_point(z), int(m)) for z, m in p_zeros]
    for z, m in zeros:
        if m < 1:
            raise ValidationError("p zeros need positive multiplicities")
        if not abs(z) < 1:
            raise ValidationError(f"zero {z!r} of p is not inside the unit disk")
    p = RationalFunction(tuple(WeightedPoint(z, m) for z, m in zeros))
    n = sum(m for _, m in zeros)
    dig = digest(p, R, eps, h)
    L = bounds.theorem3_L(n, R, eps)
    if len(h) and multiplicity_at(h, 0) != 0:
        return TrialRecord("skipped", L, inputs_digest=dig, note="h has a zero or pole at 0")
    if not rho(h, 0) < L:
        return TrialRecord("skipped", L, inputs_digest=dig, note="rho_h(0) >= L")
    try:
        ph = p.times(h)
    except DuplicateLocationError:
        return TrialRecord("skipped", L, inputs_digest=dig, note="p and h share a location")
    p_crit = _oracle(p, DEFAULT_TOL)
    crit = _oracle(ph, DEFAULT_TOL)
    if p_crit is None or crit is None:
        return TrialRecord("inconclusive", L, inputs_digest=dig, note="oracle did not converge")
    predicted = all_critical_points(p, p_crit)
    found = all_critical_points(ph, crit)
    match = match_clusters(predicted, found, eps, "at_least")
    count_inside = sum(m for c, m in found if abs(c) < R)
    outside = [abs(c) / R - 1.0 for c, _ in found if abs(c) >= R]
    ok = match.passed and count_inside == n - 1
    note = ""
    if not ok:
        note = f"clusters {match.counts}, {count_inside} in B(0;R), expected {n - 1}"
    return TrialRecord("pass" if ok else "fail", L, sum(m for _, m in found),
                       min(outside, default=math.inf), dig, note=note)


def check_theorem4(g: RationalFunction, h: RationalFunction, eps: float,
                   tol: float = DEFAULT_TOL,
                   samples: int = bounds.DEFAULT_SAMPLES) -> TrialRecord:
    """Critical points of g*h^n at the threshold n: exactly m near each
    non-trivial critical point of h (multiplicity m), exactly one near each
    zero/pole of g, and k - 1 in total counting those at infinity.

    Critical points of h at infinity may leave finite critical points of
    g*h^n far from every cluster; up to that many unmatched points are allowed.
    margin: 1 - (largest cluster offset) / eps.
    """
    dig = digest(g, h, eps)
    if len(h) == 0:
        return TrialRecord("skipped", inputs_digest=dig, note="h is constant")
    if set(g.locations) & set(h.locations):
        return TrialRecord("skipped", inputs_digest=dig, note="g and h share a location")
    g_crit = _oracle(g, DEFAULT_TOL) if len(g) else RootResult()
    h_crit = _oracle(h, DEFAULT_TOL)
    if g_crit is None or h_crit is None:
        return TrialRecord("inconclusive", inputs_digest=dig, note="oracle did not converge")
    try:
        const = bounds.theorem4_constants(g, h, eps, samples, g_crit, h_crit)
    except EpsilonTooLargeError as exc:
        return TrialRecord("skipped", inputs_digest=dig, note=str(exc))
    except UncertifiableMinimumError as exc:
        return TrialRecord("inconclusive", inputs_digest=dig, note=str(exc))
    n = const.n
    f = g.times(h.power(n))
    crit = _oracle(f, DEFAULT_TOL)
    if crit is None:
        return TrialRecord("inconclusive", n, inputs_digest=dig, note="oracle did not converge")
    predicted = list(h_crit.roots) + [(w, 1) for w in g.locations]
    try:
        match = match_clusters(predicted, crit, eps, "exact")
    except OverlappingCentersError as exc:
        return TrialRecord("skipped", n, inputs_digest=dig, note=str(exc))
    expected = len(f) - 1
    stray = sum(m for _, m in match.unassigned)
    ok = (match.passed and crit.total_count == expected
          and stray <= h_crit.deficiency_at_infinity)
    note = ""
    if not ok:
        note = (f"counts {match.counts} vs {[m for _, m in predicted]}, "
                f"total {crit.total_count} vs {expected}, stray {stray}")
    margin = 1.0 - match.max_offset / eps
    return TrialRecord("pass" if ok else "fail", n, crit.finite_count, margin, dig,
                       note=note, details={"M": const.M.value, "m": const.m.value})


def check_lemma1(f: RationalFunction, z1, z2) -> TrialRecord:
    """rho_f(z2) stays below the continuity bound. margin: bound / rho_f(z2) - 1."""
    dig = digest(f, z1, z2)
    try:
        bound = rho_continuity_bound(f, z1, z2)
    except PreconditionError as exc:
        return TrialRecord("skipped", inputs_digest=dig, note=str(exc))
    actual = rho(f, z2)
    margin = bound / actual - 1.0 if actual > 0 else math.inf
    return TrialRecord("pass" if actual <= bound else "fail", bound, 0, margin, dig)


def check_lemma2(f: RationalFunction, residual_tol: float = RESIDUAL_TOL) -> TrialRecord:
    """Roots of N are zeros of the partial-fraction sum; the locations are
    simple roots of D and never roots of N. margin: 1 - max residual / residual_tol."""
    dig = digest(f)
    ld = log_derivative(f)
    crit = _oracle(f, DEFAULT_TOL)
    if crit is None:
        return TrialRecord("inconclusive", inputs_digest=dig, note="oracle did not converge")
    worst = max(crit.residuals, default=0.0)
    locs = f.locations
    num = ld.numerator
    scale_n = float(np.max(np.abs(num.coefficients)))
    n_ok = all(poly_eval(num, w) != 0 for w in locs)
    # exact zero of D is not expected in floating point; compare to its scale
    dprime = ld.denominator.derivative()
    d_ok = all(
        abs(poly_eval(ld.denominator, w)) <= 1e-12 * max(1.0, abs(w)) ** len(locs) * len(locs)
        and poly_eval(dprime, w) != 0
        for w in locs
    )
    count_ok = crit.total_count == len(f) - 1
    ok = worst <= residual_tol and n_ok and d_ok and count_ok
    notes = []
    if not n_ok:
        notes.append("N vanishes at a location")
    if not d_ok:
        notes.append("D not simple at a location")
    if not count_ok:
        notes.append(f"count {crit.total_count} != {len(f) - 1}")
    if worst > residual_tol:
        notes.append(f"residual {worst:.2e}")
    return TrialRecord("pass" if ok else "fail", scale_n, crit.finite_count,
                       1.0 - worst / residual_tol, dig, note="; ".join(notes))


def check_remark_count(f: RationalFunction) -> TrialRecord:
    """Finite critical points plus those at infinity number k - 1, and the
    leading coefficient of N is the multiplicity sum.
    margin: 0 when the count is exact."""
    dig = digest(f)
    crit = _oracle(f, DEFAULT_TOL)
    if crit is None:
        return TrialRecord("inconclusive", inputs_digest=dig, note="oracle did not converge")
    k = len(f)
    ld = log_derivative(f)
    msum = sum(f.multiplicities)
    lead = ld.numerator.leading if ld.numerator.degree == k - 1 else 0.0
    lead_ok = abs(lead - msum) <= 1e-12 * max(1.0, abs(msum))
    ok = crit.total_count == k - 1 and lead_ok
    return TrialRecord("pass" if ok else "fail", float(k - 1), crit.finite_count,
                       float(-abs(crit.total_count - (k - 1))), dig,
                       note="" if ok else f"total {crit.total_count}, k-1 = {k - 1}")


# -- suites ----------------------------------------------------------------

@dataclass(frozen=True)
class SuiteParams:
    """Per-suite knobs. ``None`` picks the suite's default."""

    R: float | None = None
    eps: float | None = None
    eps_factor: float | None = None
    tol: float = DEFAULT_TOL
    samples: int = bounds.DEFAULT_SAMPLES
    residual_tol: float = RESIDUAL_TOL
    h_points_max: int = 3


def default_config(theorem_id: str, seed: int = 42, trials: int = 100) -> EnsembleConfig:
    """Ensemble used by each suite unless the caller overrides it."""
    if theorem_id == "thm3":
        return EnsembleConfig(seed, trials, 1, 4, 0.05, 0.9, 2, False, 0.05)
    if theorem_id == "thm4":
        return EnsembleConfig(seed, trials, 1, 3, 0.1, 1.0, 3, True, 0.05)
    return EnsembleConfig(seed, trials, 2, 8, 0.1, 1.0, 3, True, 0.05)


def _sub_rng(seed: int, tag: str):
    return np.random.default_rng([seed, THEOREMS.index(tag) + 1])


def _suite_thm1(cfg, params, rng):
    for f in generate_ensemble(cfg):
        z0 = f.locations[int(rng.integers(0, len(f)))]
        yield check_theorem1(f, z0, params.tol, params.residual_tol)


def _suite_cor1(cfg, params, rng):
    for h in generate_ensemble(cfg):
        while True:
            r = cfg.annulus_outer * math.sqrt(rng.random())
            t = rng.uniform(0.0, 2.0 * math.pi)
            z0 = complex(r * math.cos(t), r * math.sin(t))
            if min_distance(h, z0) >= cfg.min_separation:
                break
        k = int(rng.integers(1, cfg.mult_max + 1))
        if cfg.allow_poles and rng.random() < 0.5:
            k = -k
        # largest admissible R, shrunk by a random factor (1 = boundary case)
        r_max = abs(k) / ((abs(k) + 1) * rho(h, z0))
        u = 1.0 if rng.random() < 0.1 else rng.uniform(0.5, 1.0)
        yield check_corollary1(z0, k, r_max * u * (1 - 1e-12), h, params.tol)


def _suite_thm2(cfg, params, rng):
    R = 3.0 if params.R is None else params.R
    factor = 0.1 if params.eps_factor is None else params.eps_factor
    for g in generate_ensemble(cfg):
        g_crit = _oracle(g, DEFAULT_TOL)
        if g_crit is None:
            yield TrialRecord("inconclusive", inputs_digest=digest(g),
                              note="oracle did not converge on g")
            continue
        eps = params.eps
        if eps is None:
            eps = factor * pairwise_min_distance(bounds.theorem2_points(g, g_crit))
        if not bounds.theorem2_validate(g, R, eps, g_crit):
            yield TrialRecord("skipped", inputs_digest=digest(g, R, eps),
                              note="eps/R conditions fail for g")
            continue
        try:
            const = bounds.theorem2_constant(g, R, eps, params.samples, g_crit)
        except UncertifiableMinimumError as exc:
            yield TrialRecord("inconclusive", inputs_digest=digest(g, R, eps), note=str(exc))
            continue
        h = far_function(rng, 1.0 / const.K, params.h_points_max, cfg.mult_max, cfg.allow_poles)
        yield check_theorem2(g, R, eps, h, params.tol, params.samples, g_crit, const)


def _suite_thm3(cfg, params, rng):
    R = 2.0 if params.R is None else params.R
    eps = 0.5 if params.eps is None else params.eps
    for p in generate_ensemble(cfg):
        zeros = [(pt.location, pt.multiplicity) for pt in p.points]
        L = bounds.theorem3_L(sum(m for _, m in zeros), R, eps)
        h = far_function(rng, 1.0 / L, params.h_points_max, 3, True)
        yield check_theorem3(zeros, R, eps, h, params.tol)


def _suite_thm4(cfg, params, rng):
    factor = 0.4 if params.eps_factor is None else params.eps_factor
    for _ in range(cfg.trials):
        ng = int(rng.integers(cfg.points_min, cfg.points_max + 1))
        nh = int(rng.integers(cfg.points_min, cfg.points_max + 1))
        joint = random_function(rng, cfg, ng + nh)
        g = RationalFunction(joint.points[:ng])
        h = RationalFunction(joint.points[ng:])
        g_crit = _oracle(g, DEFAULT_TOL)
        h_crit = _oracle(h, DEFAULT_TOL)
        if g_crit is None or h_crit is None:
            yield TrialRecord("inconclusive", inputs_digest=digest(g, h),
                              note="oracle did not converge")
            continue
        eps = params.eps
        if eps is None:
            eps = factor * pairwise_min_distance(bounds.theorem4_points(g, h, g_crit, h_crit))
        yield check_theorem4(g, h, eps, params.tol, params.samples)


def _suite_lemma1(cfg, params, rng):
    for f in generate_ensemble(cfg):
        while True:
            r = 1.2 * cfg.annulus_outer * math.sqrt(rng.random())
            t = rng.uniform(0.0, 2.0 * math.pi)
            z1 = complex(r * math.cos(t), r * math.sin(t))
            if multiplicity_at(f, z1) == 0 and min_distance(f, z1) > 0:
                break
        d = min_distance(f, z1)
        s = 0.9 * d * math.sqrt(rng.random())
        t = rng.uniform(0.0, 2.0 * math.pi)
        z2 = z1 + complex(s * math.cos(t), s * math.sin(t))
        yield check_lemma1(f, z1, z2)


def _suite_lemma2(cfg, params, rng):
    for f in generate_ensemble(cfg):
        yield check_lemma2(f, params.residual_tol)


def _suite_remark_count(cfg, params, rng):
    for f in generate_ensemble(cfg):
        yield check_remark_count(f)


_SUITES: dict[str, Callable] = {
    "thm1": _suite_thm1,
    "cor1": _suite_cor1,
    "thm2": _suite_thm2,
    "thm3": _suite_thm3,
    "thm4": _suite_thm4,
    "lemma1": _suite_lemma1,
    "lemma2": _suite_lemma2,
    "remark_count": _suite_remark_count,
}


def run_suite(theorem_id: str, cfg: EnsembleConfig | None = None,
              params: SuiteParams | None = None) -> VerificationReport:
    """Run one check over a seeded ensemble; output depends only on the inputs."""
    if theorem_id not in _SUITES:
        raise ValueError(f"unknown theorem id {theorem_id!r}; choose from {THEOREMS}")
    cfg = cfg or default_config(theorem_id)
    params = params or SuiteParams()
    rng = _sub_rng(cfg.seed, theorem_id)
    report = VerificationReport(theorem_id)
    for i, rec in enumerate(_SUITES[theorem_id](cfg, params, rng)):
        report.records.append(replace(rec, index=i))
    return report
