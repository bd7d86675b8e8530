import numpy as np
import pytest

import rosenau_lab as rl


@pytest.fixture(scope="module")
def c2_profile():
    return rl.solve_profile(c=2.0, p=1.0)


def test_profile_peak_and_residual(c2_profile):
    assert abs(c2_profile["peak_amplitude"] - 2.6576) < 1e-3
    assert c2_profile["history"][-1]["residual"] < 1e-10
    assert c2_profile["Q"].shape == (1024,)


def test_identities_hold(c2_profile):
    ids = rl.check_identities(c2_profile["Q"], -50.0, 50.0, 2.0, 1.0)
    for name in ("energy_identity", "pohozaev", "combined"):
        assert ids[name]["rel_gap"] < 1e-8


def test_profile_travels_and_keeps_energy(c2_profile):
    Q = c2_profile["Q"]
    # c T = 16 grid spacings, so the exact answer is a roll of the nodes
    dx = 100.0 / 1024
    run = rl.evolve(Q, -50.0, 50.0, 1.0, 16 * dx / 2.0, 200, stride=50)
    assert run["snapshots"].shape == (5, 1024)
    assert np.ptp(run["energy"]) < 1e-10 * run["energy"][0]
    shifted = np.roll(Q, 16)
    assert np.max(np.abs(run["snapshots"][-1] - shifted)) < 1e-6


def test_energy_of_zero_field():
    assert rl.energy(np.zeros(64), 0.0, 1.0) == 0.0


def test_config_errors_map_to_python():
    with pytest.raises(rl.ConfigError):
        rl.solve_profile(c=1.0)
    with pytest.raises(rl.ConfigError):
        rl.nodes(0.0, 1.0, 7)
    with pytest.raises(rl.RosenauError):
        rl.EllipticCase("IIa", c2=1.0)


def test_elliptic_constants():
    iia = rl.EllipticCase("IIa")
    assert (iia.a0, iia.a2, iia.a4) == (56.0, -560.0, 840.0)
    assert abs(iia.R - (4 - 2 * np.sqrt(2))) < 1e-14
    assert iia.has_poles
    iib = rl.EllipticCase("IIb")
    assert not iib.has_poles
    assert iib.ode_residual() < 1e-8
    x = np.linspace(-1, 1, 5)
    assert np.all(np.isfinite(iib.u(x, 0.3)))


def test_temporal_order():
    x = rl.nodes(-50.0, 50.0, 256)
    u0 = 0.5 / np.cosh(x / 4) ** 2
    t = rl.temporal_convergence(u0, -50.0, 50.0, 1.0, 2.0, [10, 20, 40], 640)
    assert 3.5 < t["fitted_order"] < 4.5
