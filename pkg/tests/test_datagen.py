import numpy as np
import pytest

from hullsieve.datagen import (
    DatasetSpec, gen_circle, gen_collinear, gen_disk, gen_square, load_obj_projected,
    load_points, save_points,
)
from hullsieve.errors import EmptyInputError, ParseError
from hullsieve.oracle import monotone_chain


@pytest.mark.parametrize("gen", [gen_square, gen_disk, gen_circle, gen_collinear])
def test_generators_are_deterministic(gen):
    assert np.array_equal(gen(5, 123), gen(5, 123))
    assert np.array_equal(gen(1000, 9), gen(1000, 9))
    assert not np.array_equal(gen(1000, 9), gen(1000, 10))


def test_square_range_and_balance():
    pts = gen_square(100_000, 1)
    assert pts.shape == (100_000, 2)
    assert ((pts >= 0) & (pts <= 1)).all()
    # binomial(1e5, 1/2): sd is 0.0016, so 0.01 is more than 6 sd
    assert abs(np.mean(pts[:, 0] <= 0.5) - 0.5) <= 0.01


def test_disk_range_and_area():
    pts = gen_disk(100_000, 1)
    r2 = pts[:, 0] ** 2 + pts[:, 1] ** 2
    assert pts.shape == (100_000, 2)
    assert (r2 <= 1.0).all()
    # the inner disk of radius 1/2 holds a quarter of the area
    assert abs(np.mean(r2 <= 0.25) - 0.25) <= 0.01


@pytest.mark.parametrize("n", [3, 100, 10_000])
def test_circle_points_are_all_extreme(n):
    pts = gen_circle(n, 7)
    assert np.all(np.abs(pts[:, 0] ** 2 + pts[:, 1] ** 2 - 1.0) <= 1e-12)
    assert len(monotone_chain(pts)) == n


def test_circle_needs_three():
    with pytest.raises(ValueError):
        gen_circle(2, 0)


def test_load_points(tmp_path):
    f = tmp_path / "a.xy"
    f.write_text("0 0\n1 2.5\n")
    assert load_points(f).tolist() == [[0, 0], [1, 2.5]]

    f.write_text("# header\n\n3 4\n3 4\n")
    assert load_points(f).tolist() == [[3, 4], [3, 4]]

    f.write_text("")
    with pytest.raises(EmptyInputError):
        load_points(f)

    f.write_text("a b\n")
    with pytest.raises(ParseError) as err:
        load_points(f)
    assert err.value.lineno == 1

    f.write_text("1 2\n1 2 3\n")
    with pytest.raises(ParseError) as err:
        load_points(f)
    assert err.value.lineno == 2

    f.write_text("1 nan\n")
    with pytest.raises(ParseError):
        load_points(f)

    with pytest.raises(OSError):
        load_points(tmp_path / "missing.xy")


def test_load_obj(tmp_path):
    f = tmp_path / "m.obj"
    f.write_text("v 1 2 3\nf 1 2 3\nv 4 5 6\n")
    assert load_obj_projected(f).tolist() == [[1, 2], [4, 5]]

    f.write_text("# only faces\nvn 0 0 1\nf 1 2 3\n")
    with pytest.raises(EmptyInputError):
        load_obj_projected(f)

    f.write_text("v 1 2\n")
    assert load_obj_projected(f).tolist() == [[1, 2]]

    f.write_text("v 1\n")
    with pytest.raises(ParseError):
        load_obj_projected(f)


def test_save_roundtrip(tmp_path):
    pts = gen_disk(50, 3)
    f = tmp_path / "d.xy"
    save_points(pts, f)
    assert np.array_equal(load_points(f), pts)


def test_dataset_spec():
    assert DatasetSpec("disk", n=10, seed=1).materialize().shape == (10, 2)
    with pytest.raises(ValueError):
        DatasetSpec("file")
    with pytest.raises(ValueError):
        DatasetSpec("square", n=0)
    with pytest.raises(ValueError):
        DatasetSpec("cube", n=3)
