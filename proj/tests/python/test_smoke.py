import math

import numpy as np
import pytest

import parageo as pg


def test_paracomplex_arithmetic():
    a = pg.Paracomplex.from_xy(2.0, 1.0)
    b = pg.Paracomplex.from_xy(3.0, 2.0)
    prod = a * b
    assert prod.x == 8.0 and prod.y == 7.0
    assert (a * a.conj()).y == 0.0
    eps = pg.parse_paracomplex("eps")
    assert (eps * eps).x == 1.0
    with pytest.raises(pg.ParageoError):
        pg.Paracomplex.from_xy(1.0, 1.0).inv()


def test_distances():
    p = np.array([0.5, 0.5])
    q = np.array([0.9, 0.1])
    bc = pg.bhattacharyya_affinity(p, q)
    assert bc == pytest.approx(math.sqrt(0.45) + math.sqrt(0.05), abs=1e-14)
    assert pg.fisher_rao_distance(p, p) == pytest.approx(0.0, abs=1e-7)
    x, y = pg.embed_projective(p), pg.embed_projective(q)
    delta = pg.hermitian_distance(x, y)
    assert math.cos(delta) ** 2 == pytest.approx(bc**2, abs=1e-12)
    assert pg.cross_ratio_distance(x, y) == pytest.approx(delta, abs=1e-8)


def test_geodesic():
    p0 = np.array([0.5, 0.5])
    out = pg.simplex_geodesic(p0, np.array([1.0, 0.0]), 1.0)
    e = math.exp(1.0)
    assert out[0] == pytest.approx(e / (1 + e), abs=1e-13)
    assert out.sum() == pytest.approx(1.0, abs=1e-12)


def test_signature_and_causal():
    g = np.diag([-1.0, 1.0, 1.0, 1.0])
    assert pg.signature_of_gram(g) == (1, 0, 3)
    assert pg.causal_class(3, 1, np.array([1.0, 1.0, 0.0])) == pg.CausalClass.Null
    assert pg.causal_class(3, 1, np.array([2.0, 1.0, 0.0])) == pg.CausalClass.Timelike
    assert pg.orthant_is_self_dual(3, 200, seed=1)


def test_structure_checks():
    theta = np.array([0.2, -0.4])
    assert pg.maurer_cartan_residual("exponential", 3, theta) <= 1e-8
    assert pg.alpha_connection_curvature("exponential", 3, theta, 1.0) <= 1e-5
    g = pg.fisher_metric("bernoulli", 2, np.array([0.5]))
    assert g[0, 0] == pytest.approx(4.0, abs=1e-12)
    assert pg.orientable(3) and not pg.orientable(2)


def test_run_suite():
    report = pg.run_suite("algebra", seed=42)
    assert report["suite"] == "algebra"
    assert all(prop["pass"] for prop in report["properties"])
    assert set(pg.suite_names()) >= {"algebra", "cover", "causal"}
