import math

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ratcrit import RationalFunction, pairwise_min_distance

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

mult = st.integers(min_value=-3, max_value=3).filter(lambda m: m != 0)
cell = st.tuples(st.integers(-8, 8), st.integers(-8, 8))
jitter = st.floats(min_value=-0.1, max_value=0.1, allow_nan=False)


@st.composite
def rational_functions(draw, min_points=1, max_points=6, poles=True):
    """Distinct lattice cells of side 0.25, jittered by up to 0.1: locations in
    [-2.1, 2.1]^2 with pairwise separation at least 0.05."""
    cells = draw(st.lists(cell, min_size=min_points, max_size=max_points, unique=True))
    locs = [complex(0.25 * a + draw(jitter), 0.25 * b + draw(jitter)) for a, b in cells]
    mults = [draw(mult if poles else st.integers(1, 3)) for _ in locs]
    return RationalFunction(tuple(zip(locs, mults)))


def nearest(points, z):
    return min(points, key=lambda w: abs(w - z))


def close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


def f_of(*pairs):
    return RationalFunction(tuple(pairs))


__all__ = ["rational_functions", "nearest", "close", "f_of", "math", "pairwise_min_distance"]
