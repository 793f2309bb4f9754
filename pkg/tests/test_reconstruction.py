import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from oftt.eigen import interface_eigs
from oftt.eos import GasParams, entropy_vars
from oftt.reconstruction import (
    eno_coefficients,
    eno_edges,
    eno_reconstruct,
    minmod,
    reconstruct_scaled_jump,
    scale,
    scaled_jump_from_w,
    stencil_width,
)

from conftest import random_states

G14 = GasParams(1.4, 1.4)
finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def test_minmod_examples():
    assert minmod(1.0, 2.0) == 1.0
    assert minmod(-3.0, -0.5) == -0.5
    assert minmod(1.0, -1.0) == 0.0
    assert minmod(0.0, 4.0) == 0.0
    np.testing.assert_array_equal(minmod([1, -2, 3], [2, -1, -3]), [1, -1, 0])


@pytest.mark.parametrize("degree", [1, 2, 3])
def test_eno_coefficients_rows_are_consistent(degree):
    c = eno_coefficients(degree)
    assert c.shape == (degree + 2, degree + 1)
    np.testing.assert_allclose(c.sum(axis=1), 1.0, atol=1e-14)


def test_eno_coefficient_examples():
    # centred quadratic from averages (w_{i-1}, w_i, w_{i+1}) to the right edge
    np.testing.assert_allclose(eno_coefficients(2)[2], [-1 / 6, 5 / 6, 1 / 3], atol=1e-14)
    np.testing.assert_allclose(eno_coefficients(1)[1], [0.5, 0.5], atol=1e-14)


@pytest.mark.parametrize("degree", [1, 2, 3])
def test_eno_exact_on_polynomial_averages(degree):
    j = np.arange(-degree, degree + 1)
    for p in range(degree + 1):
        avg = ((j + 0.5) ** (p + 1) - (j - 0.5) ** (p + 1)) / (p + 1)
        assert eno_reconstruct(avg, degree, degree, "right") == pytest.approx(0.5**p, abs=1e-12)
        assert eno_reconstruct(avg, degree, degree, "left") == pytest.approx((-0.5) ** p, abs=1e-12)


def test_eno_picks_smooth_side_of_a_discontinuity():
    w = np.array([0.0, 0.0, 0.0, 0.0, 1.0])
    assert eno_reconstruct(w, 2, 2, "right") == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("degree", [1, 2, 3])
def test_eno_order_on_sine_averages(degree):
    errs = []
    for n in (40, 80, 160):
        h = 2 * np.pi / n
        xf = h * np.arange(-degree, n + degree + 1) - 0.0
        avg = (np.cos(xf[:-1]) - np.cos(xf[1:])) / h  # averages of sin
        vl, vr = eno_edges(avg[:, None], degree)
        errs.append(np.abs(vr[:, 0] - np.sin(xf[degree + 1 : degree + 1 + n])).max())
    rates = np.log2(np.array(errs[:-1]) / errs[1:])
    assert np.all(rates > degree + 1 - 0.3)


def test_eno_reconstruct_errors():
    with pytest.raises(ValueError):
        eno_reconstruct(np.ones(4), 2, 1)
    with pytest.raises(ValueError):
        eno_reconstruct(np.ones(5), 2, 2, "middle")
    with pytest.raises(ValueError):
        eno_reconstruct(np.ones(5), -1, 2)
    with pytest.raises(ValueError):
        eno_edges(np.ones((3, 1)), 2)
    with pytest.raises(ValueError):
        scaled_jump_from_w(np.ones((5, 5)), 3)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@given(data=st.data())
def test_scaled_jump_sign_property(k, data):
    w = data.draw(arrays(float, (stencil_width(k), 3), elements=finite))
    h = stencil_width(k) // 2
    base = w[h] - w[h - 1]
    jump = scaled_jump_from_w(w, k)
    tol = 1e-12 * (1 + np.abs(w).max())
    assert np.all(jump * np.sign(base) >= -tol)
    assert np.all(np.abs(jump[np.abs(base) == 0]) <= tol)


@given(arrays(float, (4, 2), elements=finite))
def test_minmod_jump_bounded_by_plain_jump(w):
    base = w[2] - w[1]
    jump = scaled_jump_from_w(w, 2)
    assert np.all(np.abs(jump) <= np.abs(base) * (1 + 1e-12) + 1e-12)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_constant_stencil_has_zero_jump(k, rng):
    W = np.tile(random_states(rng, 1)[0], (stencil_width(k), 1))
    R, _ = interface_eigs(W[0], W[0], G14, "x")
    assert np.abs(reconstruct_scaled_jump(W, R, G14, k)).max() < 1e-14


def test_reconstruction_uses_one_matrix_for_the_stencil(rng):
    W = random_states(rng, 8)
    R, _ = interface_eigs(W[3], W[4], G14, "x")
    w = scale(entropy_vars(W, G14), R)
    np.testing.assert_allclose(w[2], R.T @ entropy_vars(W[2], G14), rtol=1e-13)
    np.testing.assert_allclose(reconstruct_scaled_jump(W, R, G14, 4), scaled_jump_from_w(w, 4), rtol=1e-13)
