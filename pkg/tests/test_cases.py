import numpy as np
import pytest

from oftt.cases import (
    CATALOG,
    RIEMANN2D_VARIANTS,
    case_names,
    exact_solution,
    get_case,
    init_case,
    make_grid,
)
from oftt.eos import cons_to_prim
from oftt.errors import UnsupportedCaseError

NAMES = [
    "accuracy1d_I", "accuracy1d_II", "double_rarefaction", "sod", "lax",
    "accuracy2d", "riemann2d", "shock_bubble", "richtmyer_meshkov",
]


def test_catalog_has_nine_cases():
    assert case_names() == NAMES


@pytest.mark.parametrize("name", NAMES)
def test_initial_states_admissible(name):
    spec = get_case(name)
    n = (64, 64) if spec.ndim == 2 else (200, 1)
    f, _ = init_case(name, make_grid(spec, *n))
    W = cons_to_prim(f.interior, spec.gas)
    assert np.all(W[..., [0, 3, 4]] > 0)
    if spec.ndim == 1:
        assert np.all(W[..., 2] == 0)


def test_riemann_initial_states():
    spec = get_case("sod")
    W = spec.init(np.array([-1.0, 1.0]), np.zeros(2))
    np.testing.assert_allclose(W, [[1.0, 0, 0, 0.4, 0.6], [0.125, 0, 0, 0.06, 0.04]])
    W = get_case("lax").init(np.array([-1.0, 1.0]), np.zeros(2))
    np.testing.assert_allclose(W[0], [0.445, 0.689, 0, 1.764, 1.764])
    assert get_case("lax").gas.gamma_i == 1.67 and get_case("lax").t_final == 1.4
    W = get_case("double_rarefaction").init(np.array([-1.0, 1.0]), np.zeros(2))
    np.testing.assert_allclose(W[:, 1], [-1.0, 1.0])


def test_riemann2d_quadrants_and_variants():
    spec = get_case("riemann2d")
    W = spec.init(np.array([0.9, 0.1, 0.1, 0.9]), np.array([0.9, 0.9, 0.1, 0.1]))
    np.testing.assert_allclose(W[:, 0], [1.5, 0.5323, 0.138, 0.5323])
    v2 = get_case("riemann2d", 2)
    assert v2.gas == RIEMANN2D_VARIANTS[2][0] and v2.t_final == 0.59
    with pytest.raises(UnsupportedCaseError):
        get_case("sod", 2)
    with pytest.raises(UnsupportedCaseError):
        get_case("riemann2d", 7)


def test_shock_bubble_regions_and_boundaries():
    spec = get_case("shock_bubble")
    W = spec.init(np.array([1.0, 3.5, 5.0]), np.array([0.5, 0.0, 0.5]))
    np.testing.assert_allclose(W[:, 0], [1.0, 0.1819, 1.3764])
    assert spec.bc["left"] == "dirichlet" and spec.bc["top"] == "reflective"


def test_richtmyer_meshkov_regions():
    spec = get_case("richtmyer_meshkov")
    th = np.pi / 12  # cos(12 th) = -1 pulls the interface in to r = 6.922
    W = spec.init(np.array([0.0, 7.3 * np.cos(th), 10.0]), np.array([0.0, 7.3 * np.sin(th), 0.0]))
    np.testing.assert_allclose(W[:, 0], [5.04, 1.0, 1.479])
    np.testing.assert_allclose(W[2, 1:3], [-0.518, 0.0], atol=1e-15)


def test_exact_solutions():
    W = exact_solution("accuracy1d_I", np.array([np.pi / 2 + 1.3]), None, 1.3)
    np.testing.assert_allclose(W[0], [1.2, 1.0, 0.0, 2.0, 2.0])
    W = exact_solution("accuracy1d_II", np.array([0.5]), None, 0.0)
    np.testing.assert_allclose(W[0], [1.1, 1.0, 0.0, 0.7, 0.3])
    W = exact_solution("accuracy2d", np.array([1.0]), np.array([0.5]), 1.5)
    assert W[0, 0] == pytest.approx(1.0)
    with pytest.raises(UnsupportedCaseError):
        exact_solution("sod", np.zeros(1), None, 0.0)


def test_unknown_case():
    with pytest.raises(UnsupportedCaseError, match="unknown case"):
        get_case("kelvin_helmholtz")


def test_make_grid_defaults_and_aspect():
    g = make_grid(get_case("shock_bubble"), 200)
    assert (g.nx, g.ny) == (200, 72)
    g = make_grid(get_case("sod"))
    assert (g.nx, g.ny) == (2000, 1)
    g = make_grid(get_case("riemann2d"), 100)
    assert (g.nx, g.ny) == (100, 100)
    assert all(s.cfl in (0.475, 0.3) for s in CATALOG.values())
