import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hullsieve.errors import CoincidentWithAnchorError, EmptyInputError
from hullsieve.geom import Turn, as_points, orient, polar_key


@pytest.mark.parametrize(
    "a, b, c, expected",
    [
        ((0, 0), (1, 0), (0, 1), Turn.LEFT),
        ((0, 0), (1, 0), (2, 0), Turn.COLLINEAR),
        ((0, 0), (0, 1), (1, 1), Turn.RIGHT),
    ],
)
def test_orient_examples(a, b, c, expected):
    assert orient(a, b, c) is expected


@pytest.mark.parametrize(
    "p, angle, dist2",
    [((1, 1), math.pi / 4, 2.0), ((-1, 0), math.pi, 1.0), ((0, 3), math.pi / 2, 9.0)],
)
def test_polar_key_examples(p, angle, dist2):
    a, d = polar_key((0, 0), p)
    assert a == pytest.approx(angle, abs=1e-15)
    assert d == dist2


def test_polar_key_rejects_anchor():
    with pytest.raises(CoincidentWithAnchorError):
        polar_key((1.5, 2.0), (1.5, 2.0))


coord = st.integers(-10**6, 10**6)
ipoint = st.tuples(coord, coord)
fpoint = st.tuples(
    st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False),
    st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False),
)


@given(fpoint, fpoint, fpoint)
def test_orient_antisymmetric(a, b, c):
    assert orient(a, b, c) == -orient(a, c, b)


@given(ipoint, ipoint, ipoint, ipoint)
def test_orient_translation_invariant(a, b, c, off):
    def shift(p):
        return (p[0] + off[0], p[1] + off[1])

    assert orient(a, b, c) is orient(shift(a), shift(b), shift(c))


small = st.integers(-1000, 1000)


@given(st.tuples(small, st.integers(1, 1000)), st.tuples(small, st.integers(1, 1000)))
def test_angle_order_matches_orientation(p, q):
    # both strictly above the anchor at the origin
    ap, _ = polar_key((0, 0), p)
    aq, _ = polar_key((0, 0), q)
    assume(ap != aq)
    assert (ap < aq) == (orient((0, 0), p, q) is Turn.LEFT)


@given(st.tuples(small, st.integers(0, 1000)), st.tuples(small, st.integers(0, 1000)))
def test_dist2_orders_like_distance(p, q):
    assume(p != (0, 0) and q != (0, 0))
    _, dp = polar_key((0, 0), p)
    _, dq = polar_key((0, 0), q)
    assert (dp < dq) == (math.hypot(*p) < math.hypot(*q))


@given(st.integers(1, 10**6), st.integers(0, 10**6), st.integers(2, 10**3))
def test_scaled_vectors_share_angle(x, y, k):
    a1, _ = polar_key((0, 0), (x, y))
    a2, _ = polar_key((0, 0), (k * x, k * y))
    assert a1 == a2


def test_as_points_validation():
    with pytest.raises(EmptyInputError):
        as_points([])
    with pytest.raises(ValueError):
        as_points([(0.0, float("nan"))])
    with pytest.raises(ValueError):
        as_points([(0.0, 1.0, 2.0)])
    out = as_points([(-0.0, 1.0)])
    assert not np.signbit(out[0, 0])
