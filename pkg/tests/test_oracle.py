import numpy as np
import pytest
from hypothesis import given

from hullsieve.datagen import gen_disk, gen_square
from hullsieve.errors import EmptyInputError, TooLargeError
from hullsieve.hull import Hull
from hullsieve.oracle import brute_force_hull, monotone_chain, strictly_inside_hull

from .conftest import grid_points

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def test_monotone_chain_examples():
    assert monotone_chain(SQUARE + [(0.5, 0.5)]).vertices.tolist() == [[0, 0], [1, 0], [1, 1], [0, 1]]
    assert monotone_chain([(0, 0), (1, 0), (2, 0)]).vertices.tolist() == [[0, 0], [2, 0]]
    with pytest.raises(EmptyInputError):
        monotone_chain([])


def test_monotone_chain_starts_at_lowest():
    hull = monotone_chain([(0, 1), (2, 0), (4, 1), (2, 3), (3, 0)])
    assert hull.vertices[0].tolist() == [2, 0]


def test_brute_force_examples():
    assert brute_force_hull([(0, 0), (4, 0), (0, 4), (1, 1)]).vertices.tolist() == [[0, 0], [4, 0], [0, 4]]
    assert brute_force_hull([(3, 7)]).vertices.tolist() == [[3, 7]]
    with pytest.raises(TooLargeError):
        brute_force_hull(np.zeros((65, 2)))


def test_brute_force_matches_chain_on_random_points(rng):
    for _ in range(20):
        pts = rng.random((20, 2))
        assert brute_force_hull(pts) == monotone_chain(pts)


@given(grid_points(max_size=30))
def test_brute_force_matches_chain_on_grids(pts):
    assert brute_force_hull(pts) == monotone_chain(pts)


@given(grid_points(max_size=50))
def test_monotone_chain_permutation_invariant(pts):
    perm = np.random.default_rng(len(pts)).permutation(len(pts))
    assert monotone_chain(pts[perm]) == monotone_chain(pts)


@pytest.mark.parametrize("p, inside", [((0.5, 0.5), True), ((0, 0.5), False), ((2, 2), False)])
def test_strictly_inside_examples(p, inside):
    assert strictly_inside_hull(Hull(SQUARE), p) is inside


@pytest.mark.parametrize("gen", [gen_square, gen_disk])
def test_vertices_never_strictly_inside(gen):
    hull = monotone_chain(gen(3000, 5))
    assert not any(strictly_inside_hull(hull, v) for v in hull.vertices)
