import numpy as np
import pytest

from oftt import kernels
from oftt.eos import GasParams, prim_to_cons

from conftest import random_states

G = GasParams(1.4, 1.67)
needs_c = pytest.mark.skipif("cython" not in kernels.available_backends(), reason="compiled kernels not built")


def test_backend_selection_round_trip():
    assert "python" in kernels.available_backends()
    prev = kernels.set_backend("python")
    try:
        assert kernels.get_backend() == "python"
    finally:
        kernels.set_backend(prev)
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


@needs_c
@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("diss", [0.0, 1.0])
def test_sweep_backends_agree(k, diss, rng):
    W = random_states(rng, 3 * 30).reshape(3, 30, 5)
    U = prim_to_cons(W, G)
    a = kernels.sweep(U, G, k, 0.05, 4, diss, None, "python")
    b = kernels.sweep(U, G, k, 0.05, 4, diss, None, "cython")
    for x, y in zip(a, b):
        np.testing.assert_allclose(x, y, rtol=1e-11, atol=1e-12)


@needs_c
def test_max_speed_backends_agree(rng):
    U = prim_to_cons(random_states(rng, 50), G)
    a = kernels.max_speed_sum(U, G, 10.0, 5.0, "python")
    b = kernels.max_speed_sum(U, G, 10.0, 5.0, "cython")
    assert a == pytest.approx(b, rel=1e-13)


def test_sweep_shapes(rng):
    U = prim_to_cons(random_states(rng, 2 * 20).reshape(2, 20, 5), G)
    fhat, qhat, nc = kernels.sweep(U, G, 4, 0.1, 4, 1.0, None, "python")
    assert fhat.shape == (2, 13, 5) and qhat.shape == (2, 13) and nc.shape == (2, 12, 5)
