import math

import numpy as np
import pytest

from fisherdiscord import __version__, errors
from fisherdiscord.closed_forms import closed_form, lambda0
from fisherdiscord.fock import FockConfig
from fisherdiscord.params import resolve_params
from fisherdiscord.sweeps import (
    FIGURES,
    Grid,
    SweepSpec,
    figure_preset,
    format_cell,
    read_csv,
    run_figures,
    run_sweep,
    to_csv,
)


def test_grid_validation():
    np.testing.assert_allclose(Grid(0, 1, 5).values(), [0, 0.25, 0.5, 0.75, 1])
    with pytest.raises(errors.ParamOutOfDomain):
        Grid(0, 1, 1)
    with pytest.raises(errors.ParamOutOfDomain):
        Grid(1, 0, 5)


def test_spec_validation():
    with pytest.raises(errors.ParamOutOfDomain):
        SweepSpec(param="lam", grid=Grid(0, 1, 3))
    with pytest.raises(errors.ParamOutOfDomain):
        SweepSpec(param="p", grid=Grid(0, 1, 3), family="THERMAL_X")
    with pytest.raises(errors.ParamOutOfDomain):
        SweepSpec(param="lam", grid=Grid(0, 1, 3), family="THERMAL_X", fixed=(("q", 1),))
    with pytest.raises(errors.ParamOutOfDomain):
        SweepSpec(param="p", grid=Grid(0, 1, 3), state="thermal:lambda=0.1", hamiltonian="number")


def test_format_cell():
    assert format_cell(0.1) == "0.10000000000000001"
    assert format_cell(1.0) == "1"
    assert format_cell(64) == "64"
    assert format_cell(True) == "1"
    assert format_cell(float("nan")) == "nan"
    assert format_cell(1 + 2j) == "1+2j"


def test_resolve_params():
    out = resolve_params("GAUSSIAN_N", dict(lam=0.1, z=1.0, zeta_abs=0.5, zeta_arg=0.3))
    assert out["zeta"] == pytest.approx(0.5 * np.exp(0.3j))
    out = resolve_params("GAUSSIAN_X", dict(lam=0.1, zeta=0.4 * np.exp(0.2j), theta_prime=1.0))
    assert 2 * out["theta"] - 0.2 == pytest.approx(1.0)
    out = resolve_params("GAUSSIAN_L", dict(lam=0.1, theta=0.5, z_abs=1, zeta_abs=1,
                                            theta_z=0.3, theta_zeta=1.1))
    assert out["theta"] - 2 * np.angle(out["z"]) == pytest.approx(0.3)
    assert out["theta"] - np.angle(out["zeta"]) == pytest.approx(1.1)


def test_family_sweep_rows():
    spec = SweepSpec(param="p", grid=Grid(0, 1, 5), family="TWO_LEVEL_X")
    rows = run_sweep(spec)
    assert [r[0] for r in rows] == [0, 0.25, 0.5, 0.75, 1]
    for r in rows:
        assert len(r) == len(spec.columns) == 7
        assert r[1] == pytest.approx(r[2], abs=1e-12)
        assert r[-1] is True


def test_closed_only_and_state_sweeps():
    spec = SweepSpec(param="lam", grid=Grid(0.1, 0.5, 3), family="THERMAL_X", spectral=False)
    assert spec.columns == ("param", "c_closed")
    spec = SweepSpec(param="lambda", grid=Grid(0.1, 0.3, 3), state="thermal:lambda=0",
                     hamiltonian="quadrature:theta=0")
    assert spec.columns == ("param", "c_spectral", "i_f", "i_w", "used_dim", "converged")
    rows = run_sweep(spec)
    for r in rows:
        assert r[1] == pytest.approx(closed_form("THERMAL_X", lam=r[0]), rel=1e-6)
    spec = SweepSpec(param="ham.hz", grid=Grid(0, 1, 3), state="bloch:r1=0,r2=0,r3=0.6",
                     hamiltonian="pauli:hx=1", fixed=(("r1", 0.2),))
    assert all(r[4] == 2 for r in run_sweep(spec))
    with pytest.raises(errors.ParamOutOfDomain):
        SweepSpec(param="lam", grid=Grid(0, 1, 3), state="thermal:lambda=0", hamiltonian="number",
                  spectral=False)


def test_unconverged_points_are_nan():
    spec = SweepSpec(param="lam", grid=Grid(0.9, 0.95, 2), family="THERMAL_X",
                     fock=FockConfig(dim=8, max_dim=16))
    rows = run_sweep(spec)
    assert all(math.isnan(r[2]) and r[-1] is False and r[-2] == 16 for r in rows)
    assert not any(math.isnan(r[1]) for r in rows)


def test_csv_format_and_determinism():
    spec = SweepSpec(param="p", grid=Grid(0, 1, 4), family="MIXTURE_N", fixed=(("m", 0), ("n", 1)),
                     label="demo")
    a = to_csv(spec, run_sweep(spec))
    b = to_csv(spec, run_sweep(spec))
    assert a == b
    lines = a.split("\n")
    assert lines[0] == f"# fisherdiscord {__version__}"
    assert "# label: demo" in lines
    assert "# fixed: m=0; n=1" in lines
    header = [ln for ln in lines if ln and not ln.startswith("#")][0]
    assert header == "param,c_closed,c_spectral,i_f,i_w,used_dim,converged"
    assert a.endswith("\n") and "\r" not in a
    widths = {ln.count(",") for ln in lines if ln and not ln.startswith("#")}
    assert widths == {6}
    cols, data = read_csv(a)
    assert data.shape == (4, 7)
    assert data[2, 1] == closed_form("MIXTURE_N", p=data[2, 0], m=0, n=1)


def test_parallel_rows_in_order():
    spec = SweepSpec(param="lam", grid=Grid(0.1, 0.6, 6), family="THERMAL_L")
    assert run_sweep(spec, jobs=2) == run_sweep(spec, jobs=1)


def test_presets_defined():
    counts = {name: len(figure_preset(name)) for name in FIGURES}
    assert counts == {"fig1": 4, "fig2": 4, "fig3": 1, "fig4": 1, "fig5": 3, "fig6": 4, "fig7": 3,
                      "fig8": 4}
    assert figure_preset("fig4")[0].grid.count == 201
    with pytest.raises(errors.ParamOutOfDomain):
        figure_preset("fig9")


def test_fig1_fixes_phase_relation():
    for spec in figure_preset("fig1"):
        params = resolve_params("GAUSSIAN_N", {**dict(spec.fixed), spec.param: 0.7})
        assert abs(params["z"]) == pytest.approx(1.0)
        assert 2 * np.angle(params["z"]) - np.angle(params["zeta"]) == pytest.approx(0.0)


def test_run_figures_writes_files(tmp_path):
    paths = run_figures(str(tmp_path), spectral=False, names=("fig3", "fig5"), points=5)
    assert [p.rsplit("/", 1)[-1] for p in paths] == ["fig3_1.csv", "fig5_1.csv", "fig5_2.csv",
                                                     "fig5_3.csv"]
    text = open(paths[0]).read()
    assert "# family: MIXTURE_N" in text and "# spectral: off" in text
