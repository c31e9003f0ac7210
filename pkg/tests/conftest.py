import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def grid_points(max_size=40, radius=6, min_size=1):
    """Small integer grids: lots of duplicates and collinear runs, exact predicates."""
    coord = st.integers(-radius, radius)
    return st.lists(st.tuples(coord, coord), min_size=min_size, max_size=max_size).map(
        lambda pts: np.array(pts, dtype=np.float64).reshape(-1, 2)
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def on_anchor_edge(hull, anchor, p):
    """True if `p` lies on one of the two hull edges that start or end at `anchor`."""
    v = hull.vertices
    k = len(v)
    if k < 2:
        return False
    i = int(np.flatnonzero((v[:, 0] == anchor[0]) & (v[:, 1] == anchor[1]))[0])
    for j in ((i + 1) % k, (i - 1) % k):
        a, b = v[i], v[j]
        cr = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
        if cr == 0.0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) \
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]):
            return True
    return False
