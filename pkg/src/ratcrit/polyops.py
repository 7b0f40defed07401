"""Dense complex polynomials and the logarithmic derivative f'/f.

For f with distinct locations w_1..w_k and multiplicities m_1..m_k,

    f'/f = sum_i m_i / (z - w_i) = N(z) / D(z),
    D(z) = prod_j (z - w_j),
    N(z) = sum_i m_i prod_{j != i} (z - w_j).

N and D never share a root, and the roots of N are exactly the non-trivial
critical points of f.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import RationalFunction, as_point
from .errors import EmptyFunctionError, PoleEvaluationError


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Coefficients in ascending degree; trailing zeros are trimmed so the
    zero polynomial has an empty coefficient array."""

    coefficients: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=complex).ravel()
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:0]
        c.setflags(write=False)
        object.__setattr__(self, "coefficients", c)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coefficients) == 0

    @property
    def leading(self) -> complex:
        return complex(self.coefficients[-1]) if len(self.coefficients) else 0j

    def __call__(self, z):
        return poly_eval(self, z)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self.coefficients, other.coefficients)

    def __repr__(self):
        return f"Polynomial({list(self.coefficients)!r})"

    def scaled(self, s: complex) -> "Polynomial":
        return Polynomial(self.coefficients * s)

    def normalized(self) -> "Polynomial":
        """Divide through by the largest coefficient magnitude."""
        if self.is_zero:
            return self
        return self.scaled(1.0 / np.max(np.abs(self.coefficients)))

    def derivative(self) -> "Polynomial":
        c = self.coefficients
        if len(c) <= 1:
            return Polynomial(np.zeros(0, dtype=complex))
        return Polynomial(c[1:] * np.arange(1, len(c)))


def poly_eval(p: Polynomial, z):
    """Horner evaluation; works on scalars and numpy arrays alike."""
    acc = np.zeros_like(np.asarray(z, dtype=complex))
    for a in p.coefficients[::-1]:
        acc = acc * z + a
    return complex(acc) if acc.ndim == 0 else acc


def _mul_linear(c: np.ndarray, root: complex) -> np.ndarray:
    # (sum c_i z^i) * (z - root)
    out = np.zeros(len(c) + 1, dtype=complex)
    out[1:] += c
    out[:-1] -= root * c
    return out


def poly_from_roots(roots: Iterable) -> Polynomial:
    """Monic polynomial with the given ``(root, multiplicity)`` pairs."""
    c = np.ones(1, dtype=complex)
    for r, m in roots:
        r = as_point(r)
        for _ in range(int(m)):
            c = _mul_linear(c, r)
    return Polynomial(c)


def _product_except(locations: Sequence[complex], skip: int) -> np.ndarray:
    c = np.ones(1, dtype=complex)
    for j, w in enumerate(locations):
        if j != skip:
            c = _mul_linear(c, w)
    return c


@dataclass(frozen=True, eq=False)
class LogDerivative:
    numerator: Polynomial
    denominator: Polynomial
    source: RationalFunction

    @property
    def k(self) -> int:
        """Number of distinct zeros and poles of the source function."""
        return len(self.source)

    def __call__(self, z):
        return eval_log_derivative(self, z)


def log_derivative(f: RationalFunction) -> LogDerivative:
    if len(f) == 0:
        raise EmptyFunctionError("log derivative of a constant has no N/D form")
    locs = f.locations
    k = len(locs)
    num = np.zeros(k, dtype=complex)
    for i, p in enumerate(f.points):
        # multiplicity enters as an integer weight, never by repeating points
        num += p.multiplicity * _product_except(locs, i)
    den = poly_from_roots((w, 1) for w in locs)
    return LogDerivative(Polynomial(num), den, f)


def partial_fraction_sum(f: RationalFunction, z):
    """``sum_i m_i / (z - w_i)`` evaluated directly (vectorized over ``z``).

    The caller guarantees ``z`` avoids every location.
    """
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for p in f.points:
        acc = acc + p.multiplicity / (z - p.location)
    return complex(acc) if acc.ndim == 0 else acc


def eval_log_derivative(ld: LogDerivative, z) -> complex:
    z = as_point(z)
    for w in ld.source.locations:
        if z == w:
            raise PoleEvaluationError(f"f'/f has a pole at {z!r}")
    return partial_fraction_sum(ld.source, z)


def expected_critical_count(f: RationalFunction) -> int:
    """Non-trivial critical points on the Riemann sphere: ``k - 1``."""
    if len(f) == 0:
        raise EmptyFunctionError("a constant function has no critical-point count")
    return len(f) - 1
