import numpy as np
import pytest

from oftt.cases import exact_solution, get_case, init_case, make_grid
from oftt.diagnostics import (
    convergence_order,
    domain_measure,
    l1_error,
    total_entropy,
    total_entropy_change,
)
from oftt.driver import convergence_study, integrate
from oftt.eos import GasParams, prim_to_cons
from oftt.scheme import Grid, new_field


def test_l1_error_trivial_examples():
    grid = Grid(10, 1, (0, 1))
    W = np.ones((10, 1, 5))
    assert l1_error(W, W, grid) == 0.0
    assert l1_error(W + 1e-3, W, grid, "pe") == pytest.approx(1e-3)
    grid2 = Grid(4, 4, (0, 2), (0, 3))
    assert domain_measure(grid2) == pytest.approx(6.0)
    assert l1_error(np.ones((4, 4, 5)) * 2, np.ones((4, 4, 5)), grid2, normalize=True) == pytest.approx(1.0)


def test_convergence_order_examples():
    assert convergence_order([4e-3, 1e-3])[0] == pytest.approx(2.0)
    assert convergence_order([7.65e-4, 9.60e-5])[0] == pytest.approx(2.9947, abs=2e-3)
    assert convergence_order([2.44e-5, 1.86e-6])[0] == pytest.approx(3.712, abs=2e-3)
    np.testing.assert_allclose(convergence_order([9.0, 1.0], 3.0), 2.0)


def test_convergence_order_errors():
    with pytest.raises(ValueError):
        convergence_order([1.0])
    with pytest.raises(ValueError):
        convergence_order([1.0, 0.0])


def test_l1_error_example_order4_40_cells():
    spec = get_case("accuracy1d_I")
    rows = convergence_study("accuracy1d_I", 4, 1, base=40, normalize=False)
    # the unnormalized sum sits far below the printed 1.22E-04 divided by the domain measure
    assert 0 < rows[0].errors["rho"] < 1.22e-4 * 2 * np.pi


def test_total_entropy_of_constant_state():
    g = GasParams(1.4, 1.4)
    grid = Grid(8, 1, (0, 2))
    W = np.tile([1.0, 0.0, 0.0, 1.0, 1.0], (8, 1, 1))
    f = new_field(grid, prim_to_cons(W, g))
    # s = ln(pe rho^-ge) + ln(pi rho^-gi) = 0 -> Ent = 0
    assert total_entropy(f, g) == pytest.approx(0.0, abs=1e-15)


def test_steady_field_has_zero_entropy_change():
    g = GasParams(1.4, 1.4)
    grid = Grid(8, 1, (0, 2))
    f = new_field(grid, prim_to_cons(np.tile([1.3, 0.0, 0.0, 0.7, 1.1], (8, 1, 1)), g))
    out, t, steps, ledger = integrate(f, g, 3, 0.1, 0.4)
    assert np.abs(ledger.changes).max() < 1e-13
    q = np.ones((1, 9))
    assert total_entropy_change(f, f, (q, None), 0.1, grid, g) == 0.0


def test_entropy_change_is_nonpositive_on_a_short_sod_run():
    spec = get_case("sod")
    f, _ = init_case(spec, make_grid(spec, 200))
    _, _, steps, ledger = integrate(f, spec.gas, 3, 0.5, spec.cfl)
    assert steps > 10 and ledger.changes.max() <= 1e-10


def test_ec_entropy_change_small_on_smooth_data():
    spec = get_case("accuracy1d_I")
    f, _ = init_case(spec, make_grid(spec, 40))
    _, _, _, ledger = integrate(f, spec.gas, 2, 0.3, spec.cfl, dissipation=0.0)
    assert np.abs(ledger.changes).max() < 1e-6
