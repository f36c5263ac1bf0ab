import json
import math

import numpy as np
import pytest

import ecsim


@pytest.fixture
def grid():
    return ecsim.Grid(64, ecsim.PI)


def coeffs_of(grid, f):
    x = np.array([grid.x(i) for i in range(grid.n)])
    xx, yy = np.meshgrid(x, x, indexing="ij")
    return ecsim.forward(grid, f(xx, yy))


def test_transform_round_trip(grid):
    f = lambda x, y: np.cos(x) + 0.3 * np.sin(2 * x + y)
    c = coeffs_of(grid, f)
    x = np.array([grid.x(i) for i in range(grid.n)])
    xx, yy = np.meshgrid(x, x, indexing="ij")
    back = ecsim.inverse(grid, c)
    assert np.max(np.abs(back - f(xx, yy))) < 1e-12


def test_cosine_spectrum_and_l2_norm(grid):
    c = coeffs_of(grid, lambda x, y: np.cos(x))
    assert c[1, 0] == pytest.approx(0.5, abs=1e-13)
    assert c[grid.n - 1, 0] == pytest.approx(0.5, abs=1e-13)
    assert ecsim.norm_l2(grid, c) == pytest.approx(math.pi * math.sqrt(2.0), rel=1e-12)


def test_poisson_semigroup_composition(grid):
    c = ecsim.random_field(grid, 7, 4.0)
    one = ecsim.poisson_evolve(grid, ecsim.poisson_evolve(grid, c, 0.4), 0.9)
    two = ecsim.poisson_evolve(grid, c, 1.3)
    assert np.max(np.abs(one - two)) < 1e-13


def test_heat_decays_faster_than_poisson(grid):
    c = ecsim.random_field(grid, 11, 6.0)
    z = np.zeros_like(c)
    h1, _ = ecsim.heat_evolve(grid, c, z, 1.0)
    p = ecsim.poisson_evolve(grid, c, 1.0)
    assert ecsim.norm_l2(grid, h1) < ecsim.norm_l2(grid, p)


def test_leray_kills_gradients(grid):
    c = ecsim.random_field(grid, 3, 5.0)
    k = np.array([grid.k(grid.mode(i)) for i in range(grid.n)])
    g1 = 1j * k[:, None] * c
    g2 = 1j * k[None, :] * c
    p1, p2 = ecsim.leray_project(grid, g1, g2)
    assert ecsim.norm_l2(grid, p1) < 1e-12
    assert ecsim.norm_l2(grid, p2) < 1e-12


def test_cordoba_margin_cosine_oracle(grid):
    c = coeffs_of(grid, lambda x, y: np.cos(x))
    assert ecsim.check_cordoba(grid, c) == pytest.approx(math.pi**2, rel=1e-10)


def test_config_defaults_round_trip():
    cfg = json.loads(ecsim.parse_config("{}"))
    assert cfg["grid"]["n"] == 256
    assert cfg["integrator"]["dt_max"] == pytest.approx(0.05)
    assert cfg["init"]["preset"] == "gaussian_blob_vortex"
    assert ecsim.parse_config(ecsim.parse_config("{}")) == ecsim.parse_config("{}")


def test_config_rejects_odd_grid():
    with pytest.raises(ValueError):
        ecsim.parse_config(json.dumps({"grid": {"n": 63}}))


def test_scenario_registry():
    cfg = json.loads(ecsim.scenario_config("S4_linear_oracle"))
    assert cfg["init"]["preset"] == "poisson_kernel"
    assert cfg["init"]["params"]["coupling"] == 0.0
    with pytest.raises(ValueError):
        ecsim.scenario_config("S9")


def test_run_config_conserves_mean_and_dissipates():
    text = json.dumps({
        "grid": {"n": 64, "half_period": 25.0},
        "integrator": {"t_end": 1.0, "dt_max": 0.05},
        "sampling": {"per_decade": 8},
    })
    rows = ecsim.run_config(text)
    assert rows[0]["t"] == 0.0
    assert rows[-1]["t"] == pytest.approx(1.0)
    means = [r["mean_q"] for r in rows]
    assert max(means) - min(means) < 1e-14
    l2 = [r["l2q2"] for r in rows]
    assert all(b <= a * (1 + 1e-12) for a, b in zip(l2, l2[1:]))
