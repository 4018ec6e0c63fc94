import math

import numpy as np
import pytest

import bcjulia as bj


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol for x, y in zip(a.coords(), b.coords()))


def test_units_and_products():
    u = bj.units
    assert close(u.i1 * u.i1, -u.one)
    assert close(u.i2 * u.i2, -u.one)
    assert close(u.j * u.j, u.one)
    assert close(u.e1 * u.e1, u.e1)
    assert close(u.e1 * u.e2, bj.Bicomplex())


def test_idempotent_round_trip_and_division():
    a = bj.Bicomplex.from_coords(0.3, -1.2, 2.0, 0.7)
    b = bj.Bicomplex.from_coords(-1.0, 0.5, 0.25, 1.5)
    w1, w2 = a.idempotent()
    assert close(bj.Bicomplex.from_idempotent(w1, w2), a)
    assert close((a / b) * b, a, 1e-12)
    assert close(b * b.inverse(), bj.units.one)


def test_null_cone_division_raises():
    with pytest.raises(bj.NullConeError):
        bj.units.e1.inverse()
    assert bj.units.e2.is_null_cone()


def test_klein_composition():
    K = bj.ConjKind
    assert bj.compose(K.bar, K.swap) == K.swap_bar
    w = bj.Bicomplex.from_coords(1, 2, 3, 4)
    assert w.conj(K.bar).conj(K.bar) == w


def test_polynomial_evaluation_paths_agree():
    p = bj.BicomplexPoly.parse("quad c=e1e2(0.26,0;-1.754878,0)")
    assert p.projection_str(1) == "z^2+0.26"
    assert p.projection_str(2) == "z^2-1.754878"
    w = bj.Bicomplex.from_coords(0.1, 0.2, -0.3, 0.4)
    assert close(p(w), p.eval_idempotent(w), 1e-14)


def test_classify_square_map():
    p = bj.BicomplexPoly.quadratic(bj.Bicomplex())
    assert bj.classify(p, bj.Bicomplex.from_coords(0.5, 0, 0, 0))["class"] == "K2_INTERIOR"
    assert bj.classify(p, bj.Bicomplex.from_coords(2, 0, 0, 0))["class"] == "F2_UNBOUNDED"
    v = bj.classify(p, bj.Bicomplex.from_coords(1.0005, 0, 0, 0), de_threshold=1e-3)
    assert v["class"] == "J2"
    assert v["de"][0] == pytest.approx(1.0005 * math.log(1.0005), rel=1e-9)


def test_degenerate_polynomial_rejected():
    p = bj.BicomplexPoly([bj.Bicomplex(), bj.Bicomplex(), bj.units.e1])
    with pytest.raises(bj.DegenerateError):
        bj.classify(p, bj.Bicomplex())


def test_slice_matches_unit_disc():
    classes = bj.classify_slice("quad c=(0,0,0,0)", slice="w2w3", res=65, de_threshold=1e-3)
    assert classes.shape == (65, 65)
    t = np.linspace(-1.5, 1.5, 65)
    r = np.hypot(t[None, :], t[:, None])
    k2 = bj.CLASS_NAMES.index("K2_INTERIOR")
    assert np.all((classes == k2)[r < 0.999])
    assert np.all((classes == bj.CLASS_NAMES.index("F2_UNBOUNDED"))[r > 1.001])


def test_voxels_round_trip_and_symmetry(tmp_path):
    classes = bj.classify_slice("quad c=(-1.754878,0,0,0)", lo=-2, hi=2, res=33, threads=2)
    assert classes.shape == (33, 33, 33)
    j2 = classes == 0
    assert j2.any()
    assert np.array_equal(j2, j2[::-1, ::-1, ::-1])
    path = tmp_path / "v.bcj"
    bj.write_voxels(path, classes)
    assert path.read_bytes()[:4] == b"BCJ1"
    assert np.array_equal(bj.read_voxels(path), classes)


def test_raymarch_and_ppm(tmp_path):
    img = bj.raymarch("quad c=(0,0,0,0)", res=33, width=48, camera=(1, -1, -1))
    assert img.shape == (48, 48, 3)
    assert img.dtype == np.uint8
    path = tmp_path / "r.ppm"
    bj.write_ppm(path, img)
    assert np.array_equal(bj.read_ppm(path), img)
    again = bj.raymarch("quad c=(0,0,0,0)", res=33, width=48, camera=(1, -1, -1), threads=3)
    assert np.array_equal(img, again)


def test_slice_image_colours():
    classes = np.array([[1, 4], [0, 2]], dtype=np.uint8)
    img = bj.slice_image(classes)
    assert img.shape == (2, 2, 3)


def test_verify_and_cli():
    results = bj.verify(seed=42)
    assert results and all(ok for ok, _ in results.values())
    code, out, _ = bj.cli(["classify", "quad", "c=(0,0,0,0)", "point=(0.5,0,0,0)"])
    assert code == 0 and "class=K2_INTERIOR" in out
    code, _, _ = bj.cli(["classify", "quad", "c=(0,0,0,0)", "point=(1,2"])
    assert code == 2
