import numpy as np
import pytest

from oftt.cases import get_case, init_case, make_grid
from oftt.eos import GasParams, prim_to_cons
from oftt.io import CSV_HEADER, read_csv1d, read_vtk2d, write_csv1d, write_output, write_vtk2d
from oftt.scheme import Grid, new_field

G = GasParams(1.4, 1.4)


def test_csv_constant_field(tmp_path):
    grid = Grid(4, 1, (0, 1))
    f = new_field(grid, prim_to_cons(np.tile([1.0, 0.5, 0.0, 1.0, 2.0], (4, 1, 1)), G))
    p = tmp_path / "out.csv"
    write_csv1d(f, G, p)
    lines = p.read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 5
    assert len({ln.split(",", 1)[1] for ln in lines[1:]}) == 1


def test_csv_round_trip_is_bitwise(tmp_path):
    spec = get_case("sod")
    f, _ = init_case(spec, make_grid(spec, 37))
    f.interior = f.interior * (1 + 1e-9 * np.arange(37)[:, None, None])
    p = tmp_path / "sod.csv"
    write_output(f, spec.gas, p)
    data = read_csv1d(p)
    W = f.primitive(spec.gas)
    assert np.array_equal(data["rho"], W[:, 0, 0])
    assert np.array_equal(data["pi"], W[:, 0, 4])
    assert np.array_equal(data["E"], f.interior[:, 0, 3])
    assert np.array_equal(data["x"], f.grid.centers()[0][:, 0])


def test_vtk_header_and_layout(tmp_path):
    spec = get_case("riemann2d")
    f, _ = init_case(spec, make_grid(spec, 6, 4))
    p = tmp_path / "r.vtk"
    write_vtk2d(f, spec.gas, p)
    text = p.read_text()
    assert "DIMENSIONS 6 4 1" in text and "POINT_DATA 24" in text
    assert text.count("SCALARS") == 6
    back = read_vtk2d(p)
    assert back["dimensions"] == (6, 4)
    np.testing.assert_array_equal(back["rho"], f.primitive(spec.gas)[..., 0])
    assert back["origin"][0] == pytest.approx(1 / 12)


def test_output_format_errors(tmp_path):
    spec = get_case("riemann2d")
    f, _ = init_case(spec, make_grid(spec, 6, 4))
    with pytest.raises(ValueError):
        write_output(f, spec.gas, tmp_path / "x.csv", "csv1d")
    with pytest.raises(ValueError):
        write_output(f, spec.gas, tmp_path / "x", "hdf5")
    with pytest.raises(OSError, match="missing_dir"):
        write_output(f, spec.gas, tmp_path / "missing_dir" / "x.vtk")
