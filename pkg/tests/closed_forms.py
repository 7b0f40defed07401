"""Polynomials with known roots, built from linear factors (degrees 1-6)."""

import cmath
import math

CLOSED_FORM_CASES = [
    [(2.5, 1)],
    [(-1j, 1)],
    [(1j, 1), (-1j, 1)],
    [((8 + math.sqrt(28)) / 6, 1), ((8 - math.sqrt(28)) / 6, 1)],
    [(3, 2)],
    [(1, 3)],
    [(cmath.exp(2j * math.pi * k / 3), 1) for k in range(3)],
    [(0, 1), (1, 1), (3, 1)],
    [(0.5, 2), (-2, 1)],
    [(1 + 1j, 1), (1 - 1j, 1), (-0.25, 1)],
    [(cmath.exp(2j * math.pi * k / 4), 1) for k in range(4)],
    [(1, 2), (-1, 2)],
    [(0.1, 1), (0.2, 1), (0.3, 1), (0.4, 1)],
    [(2j, 4)],
    [(cmath.exp(2j * math.pi * k / 5 + 0.3j), 1) for k in range(5)],
    [(-3, 3), (1j, 2)],
    [(0, 1), (10, 1), (-10, 1), (0.5j, 1), (-0.5j, 1)],
    [(cmath.exp(2j * math.pi * k / 6), 1) for k in range(6)],
    [(1, 4), (-2, 2)],
    [(0.3 - 0.7j, 1), (-1.2, 1), (2, 2), (0.5 + 0.5j, 2)],
]
