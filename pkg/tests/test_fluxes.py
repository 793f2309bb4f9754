import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from oftt.eos import SWAP_XY, GasParams, entropy_potential, entropy_vars, physical_flux
from oftt.errors import LogMeanDomainError
from oftt.fluxes import LOG_MEAN_SWITCH, ec_flux, ec_flux4, log_mean

from conftest import gases, random_states, states

G14 = GasParams(1.4, 1.4)


def _log_mean_mp(a, b):
    mpmath.mp.prec = 128
    a, b = mpmath.mpf(a), mpmath.mpf(b)
    return float((b - a) / (mpmath.log(b) - mpmath.log(a)))


def test_log_mean_examples():
    assert log_mean(2.0, 2.0) == 2.0
    assert log_mean(1.0, np.e) == pytest.approx(np.e - 1.0, rel=1e-15)


@pytest.mark.parametrize("eps", [1e-12, 1e-9, 1e-6, 1e-3, 0.5 * LOG_MEAN_SWITCH, 0.999 * LOG_MEAN_SWITCH])
def test_log_mean_near_equal_against_extended_precision(eps):
    for a in (1.0, 0.37, 12.5):
        b = a * (1.0 + eps)
        assert log_mean(a, b) == pytest.approx(_log_mean_mp(a, b), rel=1e-14)


@given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
def test_log_mean_symmetric_and_bounded(a, b):
    m = log_mean(a, b)
    assert m == pytest.approx(log_mean(b, a), rel=1e-14)
    # geometric <= logarithmic <= arithmetic mean
    assert np.sqrt(a * b) * (1 - 1e-13) <= m <= 0.5 * (a + b) * (1 + 1e-13)


def test_log_mean_accurate_on_both_sides_of_branch_switch():
    for z in (1 - 1e-9, 1 + 1e-9):
        b = 1.0 + LOG_MEAN_SWITCH * z
        assert log_mean(1.0, b) == pytest.approx(_log_mean_mp(1.0, b), rel=1e-14)
        assert log_mean(b, 1.0) == pytest.approx(_log_mean_mp(1.0, b), rel=1e-14)


@pytest.mark.parametrize("bad", [(0.0, 1.0), (-1.0, 2.0), (1.0, np.inf), (np.nan, 1.0)])
def test_log_mean_domain(bad):
    with pytest.raises(LogMeanDomainError):
        log_mean(*bad)


def test_ec_flux_consistency_example():
    W = np.array([1.0, 1, 0, 0.5, 0.5])
    np.testing.assert_allclose(ec_flux(W, W, G14, "x"), [1, 2, 0, 4, 0.5], rtol=1e-14)


@given(states, gases)
def test_ec_flux_consistent_with_physical_flux(W, g):
    for d in ("x", "y"):
        np.testing.assert_allclose(ec_flux(W, W, g, d), physical_flux(W, g, d), rtol=1e-12, atol=1e-12)


@given(states, states, gases)
def test_ec_flux_symmetric(Wl, Wr, g):
    for d in ("x", "y"):
        np.testing.assert_allclose(ec_flux(Wl, Wr, g, d), ec_flux(Wr, Wl, g, d), rtol=1e-13, atol=1e-13)


def _ec_defect(Wl, Wr, g, d):
    f = ec_flux(Wl, Wr, g, d)
    dV = entropy_vars(Wr, g) - entropy_vars(Wl, g)
    dF = entropy_potential(Wr, d) - entropy_potential(Wl, d)
    return np.einsum("...i,...i->...", dV, f) - dF


def test_ec_condition_example_pair():
    Wl = np.array([1.0, 1, 0, 0.5, 0.5])
    Wr = np.array([2.0, 0.5, 0.3, 1.0, 0.4])
    assert abs(_ec_defect(Wl, Wr, G14, "x")) < 1e-12


@given(states, states, gases)
def test_ec_condition_property(Wl, Wr, g):
    for d in ("x", "y"):
        scale = 1.0 + np.abs(entropy_potential(Wl, d)) + np.abs(entropy_potential(Wr, d))
        assert abs(_ec_defect(Wl, Wr, g, d)) < 1e-11 * scale * 10


def test_y_flux_is_swapped_x_flux(rng):
    Wl, Wr = random_states(rng, 50), random_states(rng, 50)
    fy = ec_flux(Wl, Wr, G14, "y")
    fx = ec_flux(Wl[:, SWAP_XY], Wr[:, SWAP_XY], G14, "x")[:, SWAP_XY]
    np.testing.assert_allclose(fy, fx, rtol=1e-14, atol=1e-14)


def test_ec_flux4_consistency_and_combination(rng):
    W = random_states(rng, 1)[0]
    st4 = np.tile(W, (4, 1))
    np.testing.assert_allclose(ec_flux4(st4, G14), physical_flux(W, G14, "x"), rtol=1e-13)
    S = random_states(rng, 4)
    expect = 4 / 3 * ec_flux(S[1], S[2], G14) - (ec_flux(S[0], S[2], G14) + ec_flux(S[1], S[3], G14)) / 6
    np.testing.assert_allclose(ec_flux4(S, G14), expect, rtol=1e-14)


@pytest.mark.parametrize("order, fluxfun", [(2, "pair"), (4, "four")])
def test_flux_difference_order(order, fluxfun):
    """(f_{i+1/2} - f_{i-1/2})/h approximates d f(W(x))/dx at the advertised order."""
    g = G14

    def W_of(x):
        W = np.zeros(np.shape(x) + (5,))
        W[..., 0] = 1 + 0.2 * np.sin(x)
        W[..., 1] = 1.0
        W[..., 3] = 2 + 0.1 * np.cos(x)
        W[..., 4] = 2.0
        return W

    x0 = 0.7
    errs = []
    for h in (0.1, 0.05, 0.025):
        x = x0 + h * np.arange(-3, 4)
        W = W_of(x)
        if fluxfun == "pair":
            fr, fl = ec_flux(W[3], W[4], g), ec_flux(W[2], W[3], g)
        else:
            fr, fl = ec_flux4(W[2:6], g), ec_flux4(W[1:5], g)
        # exact derivative of the physical flux by a fine central difference
        e = 1e-5
        d = (physical_flux(W_of(x0 + e), g, "x") - physical_flux(W_of(x0 - e), g, "x")) / (2 * e)
        errs.append(np.abs((fr - fl) / h - d).max())
    rates = np.log2(np.array(errs[:-1]) / errs[1:])
    assert np.all(rates > order - 0.3)
