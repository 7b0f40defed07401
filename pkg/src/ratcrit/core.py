"""Rational functions stored as weighted point sets.

A rational function is kept only through its distinct finite zeros and poles,
each carrying a signed multiplicity (positive for zeros, negative for poles).
The overall constant factor never matters for the quantities computed here,
so it is not stored.

Points in the plane are plain Python ``complex`` values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateLocationError,
    NonFiniteError,
    PreconditionError,
    ZeroMultiplicityError,
)


def as_point(z) -> complex:
    """Coerce ``z`` (number or ``(re, im)`` pair) to a finite complex."""
    if isinstance(z, (tuple, list)):
        re, im = z
        z = complex(float(re), float(im))
    else:
        z = complex(z)
    if not cmath.isfinite(z):
        raise NonFiniteError(f"non-finite coordinate {z!r}")
    return z


@dataclass(frozen=True)
class WeightedPoint:
    location: complex
    multiplicity: int

    def __post_init__(self):
        object.__setattr__(self, "location", as_point(self.location))
        if int(self.multiplicity) != self.multiplicity:
            raise ZeroMultiplicityError(
                f"multiplicity must be an integer, got {self.multiplicity!r}"
            )
        object.__setattr__(self, "multiplicity", int(self.multiplicity))
        if self.multiplicity == 0:
            raise ZeroMultiplicityError(
                f"zero multiplicity at {self.location!r}"
            )

    @property
    def is_zero(self) -> bool:
        return self.multiplicity > 0

    @property
    def is_pole(self) -> bool:
        return self.multiplicity < 0


@dataclass(frozen=True)
class RationalFunction:
    """Finite multiset of zeros and poles with pairwise distinct locations.

    Build through :func:`make_rational_function`, which validates the points.
    An empty point list is the constant function.
    """

    points: tuple[WeightedPoint, ...] = ()

    def __post_init__(self):
        pts = tuple(
            p if isinstance(p, WeightedPoint) else WeightedPoint(*p)
            for p in self.points
        )
        seen = set()
        for p in pts:
            if p.location in seen:
                raise DuplicateLocationError(p.location)
            seen.add(p.location)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def locations(self) -> list[complex]:
        return [p.location for p in self.points]

    @property
    def multiplicities(self) -> list[int]:
        return [p.multiplicity for p in self.points]

    @property
    def zeros(self) -> list[WeightedPoint]:
        return [p for p in self.points if p.is_zero]

    @property
    def poles(self) -> list[WeightedPoint]:
        return [p for p in self.points if p.is_pole]

    def times(self, other: "RationalFunction") -> "RationalFunction":
        """Product of two functions with disjoint zero/pole sets.

        Shared locations raise :class:`DuplicateLocationError`; merging
        multiplicities at a common point is deliberately not supported.
        """
        return RationalFunction(self.points + other.points)

    def power(self, n: int) -> "RationalFunction":
        """The ``n``-th power (``n`` a nonzero integer)."""
        if n == 0:
            return RationalFunction()
        return RationalFunction(
            tuple(WeightedPoint(p.location, p.multiplicity * n) for p in self.points)
        )

    def with_point(self, z, k: int) -> "RationalFunction":
        """Multiply by ``(z - z0)**k``; ``z0`` must not already be a location."""
        return RationalFunction(self.points + (WeightedPoint(z, k),))


def make_rational_function(points: Iterable) -> RationalFunction:
    """Validated construction from ``WeightedPoint`` s or ``(location, mult)``
    pairs. Identical locations are rejected rather than merged."""
    return RationalFunction(tuple(points))


def multiplicity_at(f: RationalFunction, z) -> int:
    z = as_point(z)
    for p in f.points:
        if p.location == z:
            return p.multiplicity
    return 0


def degree(f: RationalFunction) -> int:
    """Number of finite zeros and poles counted with multiplicity."""
    return sum(abs(p.multiplicity) for p in f.points)


def min_distance(f: RationalFunction, z) -> float:
    """Smallest nonzero distance from ``z`` to a zero or pole of ``f``.

    Returns ``math.inf`` when no location other than ``z`` exists.
    """
    z = as_point(z)
    best = math.inf
    for p in f.points:
        if p.location != z:
            best = min(best, abs(z - p.location))
    return best


def rho(f: RationalFunction, z) -> float:
    """Sum of ``|mult(w)| / |z - w|`` over locations ``w != z``."""
    z = as_point(z)
    return math.fsum(
        abs(p.multiplicity) / abs(z - p.location)
        for p in f.points
        if p.location != z
    )


def rho_continuity_bound(f: RationalFunction, z1, z2) -> float:
    """Upper bound for ``rho(f, z2)`` in terms of data at ``z1``.

    Valid when ``z1`` is not a zero or pole and ``|z2 - z1| < d_f(z1)``.
    """
    z1 = as_point(z1)
    z2 = as_point(z2)
    if multiplicity_at(f, z1) != 0:
        raise PreconditionError(f"z1={z1!r} is a zero or pole of f")
    d = min_distance(f, z1)
    step = abs(z2 - z1)
    if step >= d:
        raise PreconditionError(
            f"|z2 - z1| = {step!r} is not below d_f(z1) = {d!r}"
        )
    r = rho(f, z1)
    if math.isinf(d):
        return r
    return r * d / (d - step)


def pairwise_min_distance(points: Sequence[complex]) -> float:
    """Minimum distance between distinct entries; ``inf`` for fewer than two."""
    best = math.inf
    pts = list(points)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            best = min(best, abs(pts[i] - pts[j]))
    return best
