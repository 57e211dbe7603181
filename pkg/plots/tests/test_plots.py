"""Figure scripts: smoke rendering, contract validation, idempotency.

The fixtures write CSVs by hand so this suite exercises only the public
file contract, never the simulation package.
"""

import json

import numpy as np
import pytest

from polaronix_plots import fig_heatmaps, fig_hopping, fig_trajectories
from polaronix_plots.csvio import ContractError, load_csv


def write_csv(path, header, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [",".join(header)]
    lines += [",".join(repr(float(x)) if not isinstance(x, str) else x
                       for x in row) for row in rows]
    path.write_text("\r\n".join(lines) + "\r\n")


@pytest.fixture
def trajectory_dir(tmp_path):
    t = np.linspace(0.0, 5.0, 11)
    for name, decay in (("weak", 0.3), ("strong", 1.2)):
        c = np.exp(-decay * t)
        rows = [
            (ti, 0.5 * (1 + ci), 0.5 * (1 - ci), 0.4 * ci, 0.0, ci, 0.8 * ci)
            for ti, ci in zip(t, c)
        ]
        write_csv(
            tmp_path / name / "trajectory.csv",
            ["t", "rho_ss", "rho_tt", "re_rho_st", "im_rho_st",
             "p_diff", "coherence"],
            rows,
        )
    return tmp_path


@pytest.fixture
def kernels_dir(tmp_path):
    for i, (alpha, beta) in enumerate(
        (a, b) for a in (0.5, 1.0, 2.0, 4.0) for b in (0.5, 1.0, 2.0, 4.0)
    ):
        run = tmp_path / f"run{i:02d}"
        write_csv(
            run / "kernels.csv",
            ["t", "phi_c", "phi_s"],
            [(0.0, 0.9 * (alpha + beta), 0.0), (1.0, 0.3, 0.2)],
        )
        (run / "kernels.manifest.json").write_text(json.dumps({
            "parameters": {
                "bath1": {"coupling": alpha, "exponent": 0.5},
                "bath2": {"coupling": beta, "exponent": 2.0},
            }
        }))
    return tmp_path


@pytest.fixture
def sweep_dir(tmp_path):
    header = ["s", "s_prime", "alpha", "beta", "nm", "horizon", "valid"]
    for panel, (s, sp) in enumerate(((0.5, 0.5), (0.5, 1.0), (1.0, 2.0))):
        rows = []
        for alpha in (0.1, 1.0, 2.0):
            for beta in (0.1, 1.0, 2.0):
                nm = alpha * beta * 0.01
                rows.append((s, sp, alpha, beta, nm, 20.0, "true"))
        write_csv(tmp_path / f"panel{panel}" / "sweep.csv", header, rows)
    return tmp_path


class TestTrajectories:
    def test_renders_nonempty_image(self, trajectory_dir, tmp_path):
        out = tmp_path / "figs" / "trajectories.png"
        code = fig_trajectories.main(
            ["--in", str(trajectory_dir), "--out", str(out)]
        )
        assert code == 0
        assert out.stat().st_size > 0

    def test_rerun_is_idempotent(self, trajectory_dir, tmp_path):
        out = tmp_path / "fig.png"
        argv = ["--in", str(trajectory_dir), "--out", str(out)]
        assert fig_trajectories.main(argv) == 0
        assert fig_trajectories.main(argv) == 0
        assert out.stat().st_size > 0

    def test_mangled_header_names_the_column(self, trajectory_dir, tmp_path,
                                             capsys):
        bad = trajectory_dir / "weak" / "trajectory.csv"
        bad.write_text(bad.read_text().replace("coherence", "coh"))
        code = fig_trajectories.main(
            ["--in", str(trajectory_dir), "--out", str(tmp_path / "f.png")]
        )
        assert code == 1
        err = capsys.readouterr().err
        assert "coherence" in err and "trajectory.csv" in err

    def test_missing_inputs_name_the_directory(self, tmp_path, capsys):
        empty = tmp_path / "empty"
        empty.mkdir()
        code = fig_trajectories.main(
            ["--in", str(empty), "--out", str(tmp_path / "f.png")]
        )
        assert code == 1
        assert str(empty) in capsys.readouterr().err


class TestHopping:
    def test_renders_surface(self, kernels_dir, tmp_path):
        out = tmp_path / "hopping.png"
        code = fig_hopping.main(["--in", str(kernels_dir), "--out", str(out)])
        assert code == 0
        assert out.stat().st_size > 0

    def test_missing_manifest_is_reported(self, kernels_dir, tmp_path,
                                          capsys):
        (kernels_dir / "run00" / "kernels.manifest.json").unlink()
        code = fig_hopping.main(
            ["--in", str(kernels_dir), "--out", str(tmp_path / "f.png")]
        )
        assert code == 1
        assert "manifest" in capsys.readouterr().err

    def test_mangled_header_names_the_column(self, kernels_dir, tmp_path,
                                             capsys):
        bad = kernels_dir / "run01" / "kernels.csv"
        bad.write_text(bad.read_text().replace("phi_c", "phic"))
        code = fig_hopping.main(
            ["--in", str(kernels_dir), "--out", str(tmp_path / "f.png")]
        )
        assert code == 1
        assert "phi_c" in capsys.readouterr().err


class TestHeatmaps:
    def test_renders_panels(self, sweep_dir, tmp_path):
        out = tmp_path / "heatmaps.png"
        code = fig_heatmaps.main(["--in", str(sweep_dir), "--out", str(out)])
        assert code == 0
        assert out.stat().st_size > 0

    def test_axis_extents_come_from_the_csv(self, sweep_dir):
        data = load_csv(sweep_dir / "panel0" / "sweep.csv",
                        fig_heatmaps.SWEEP_COLUMNS)
        alpha, beta, nm = fig_heatmaps.to_grid(data)
        np.testing.assert_allclose(alpha, [0.1, 1.0, 2.0])
        np.testing.assert_allclose(beta, [0.1, 1.0, 2.0])
        assert nm.shape == (3, 3)
        assert not np.any(np.isnan(nm))

    def test_invalid_cells_become_gaps(self, sweep_dir, tmp_path):
        path = sweep_dir / "panel0" / "sweep.csv"
        text = path.read_text().replace("true", "false", 1)
        path.write_text(text)
        data = load_csv(path, fig_heatmaps.SWEEP_COLUMNS)
        _, _, nm = fig_heatmaps.to_grid(data)
        assert np.isnan(nm).sum() == 1
        out = tmp_path / "heatmaps.png"
        assert fig_heatmaps.main(
            ["--in", str(sweep_dir), "--out", str(out)]
        ) == 0

    def test_mangled_header_names_the_column(self, sweep_dir, tmp_path,
                                             capsys):
        bad = sweep_dir / "panel1" / "sweep.csv"
        bad.write_text(bad.read_text().replace("nm", "value"))
        code = fig_heatmaps.main(
            ["--in", str(sweep_dir), "--out", str(tmp_path / "f.png")]
        )
        assert code == 1
        assert "'nm'" in capsys.readouterr().err


class TestLoadCsv:
    def test_missing_file(self, tmp_path):
        with pytest.raises(ContractError, match="not found"):
            load_csv(tmp_path / "absent.csv", ["t"])

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(ContractError, match="empty"):
            load_csv(path, ["t"])

    def test_non_numeric_value(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,phi_c,phi_s\r\n0.0,oops,0.0\r\n")
        with pytest.raises(ContractError, match="phi_c"):
            load_csv(path, ["t", "phi_c", "phi_s"])
