"""Command-line interface: configs, presets, outputs, exit codes."""

import csv
import json
from pathlib import Path

import pytest

from polaronix.cli import EXIT_CONFIG, load_config, main
from polaronix.csvio import (
    KERNEL_COLUMNS,
    RATE_COLUMNS,
    SWEEP_COLUMNS,
    TRAJECTORY_COLUMNS,
)
from polaronix.presets import preset_names


def run(*argv):
    return main(list(argv))


def read_header(path: Path) -> list[str]:
    with open(path, newline="") as fh:
        return next(csv.reader(fh))


class TestConfigLoading:
    def test_preset_resolves(self, tmp_path):
        code = run("kernels", "--preset", "fig2-weak", "--dt", "0.5",
                   "--tmax", "2", "--out", str(tmp_path))
        assert code == 0

    def test_all_preset_names_resolve(self):
        class Args:
            config = None
            dt = 0.5
            tmax = 2.0
            out = None
            workers = None

        for name in preset_names():
            args = Args()
            args.preset = name
            cfg = load_config(args)
            assert cfg.dt == 0.5

    def test_config_file_overrides_preset(self, tmp_path, capsys):
        config = tmp_path / "run.toml"
        config.write_text('[bath1]\ncoupling = 2.5\n')
        code = run("kernels", "--preset", "fig2-weak", "--config", str(config),
                   "--dt", "0.5", "--tmax", "2", "--out", str(tmp_path))
        assert code == 0
        manifest = json.loads(
            (tmp_path / "kernels.manifest.json").read_text()
        )
        assert manifest["parameters"]["bath1"]["coupling"] == 2.5
        assert manifest["parameters"]["bath2"]["coupling"] == 0.1

    def test_workers_env_fallback(self, monkeypatch):
        class Args:
            preset = "fig2-weak"
            config = None
            dt = None
            tmax = None
            out = None
            workers = None

        monkeypatch.setenv("POLARONIX_WORKERS", "3")
        assert load_config(Args()).workers == 3

    def test_missing_config_file_is_a_config_error(self, tmp_path, capsys):
        code = run("kernels", "--config", str(tmp_path / "absent.toml"))
        assert code == EXIT_CONFIG
        assert "not found" in capsys.readouterr().err

    def test_unknown_preset_is_a_config_error(self, capsys):
        code = run("kernels", "--preset", "nope")
        assert code == EXIT_CONFIG
        assert "unknown" in capsys.readouterr().err

    def test_subohmic_without_infrared_cutoff_is_rejected(self, tmp_path,
                                                          capsys):
        config = tmp_path / "bad.toml"
        config.write_text(
            '[model]\nomega_min = 0.0\n[bath1]\n'
            'coupling = 1.0\nexponent = 0.5\n'
        )
        code = run("kernels", "--config", str(config))
        assert code == EXIT_CONFIG
        assert "infrared" in capsys.readouterr().err


class TestOutputs:
    def test_kernels_csv_and_manifest(self, tmp_path, capsys):
        code = run("kernels", "--preset", "fig2-mid", "--dt", "0.1",
                   "--tmax", "2", "--out", str(tmp_path))
        assert code == 0
        out = tmp_path / "kernels.csv"
        assert str(out) in capsys.readouterr().out
        assert read_header(out) == KERNEL_COLUMNS
        manifest = json.loads((tmp_path / "kernels.manifest.json").read_text())
        assert manifest["tool"] == "polaronix"
        assert manifest["command"] == "kernels"
        assert manifest["outputs"] == ["kernels.csv"]
        assert manifest["parameters"]["grid"] == {"dt": 0.1, "t_max": 2.0}

    def test_rates_csv(self, tmp_path):
        assert run("rates", "--preset", "fig3-mid", "--dt", "0.1",
                   "--tmax", "2", "--out", str(tmp_path)) == 0
        assert read_header(tmp_path / "rates.csv") == RATE_COLUMNS

    def test_evolve_writes_trajectory_and_rates(self, tmp_path):
        assert run("evolve", "--preset", "fig4-mid", "--dt", "0.1",
                   "--tmax", "2", "--out", str(tmp_path)) == 0
        assert read_header(tmp_path / "trajectory.csv") == TRAJECTORY_COLUMNS
        assert read_header(tmp_path / "rates.csv") == RATE_COLUMNS
        with open(tmp_path / "trajectory.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 21
        assert float(rows[0]["rho_ss"]) == pytest.approx(2.0 / 3.0)

    def test_sweep_from_config(self, tmp_path):
        config = tmp_path / "sweep.toml"
        config.write_text(
            '[bath1]\nexponent = 0.5\n[bath2]\nexponent = 2.0\n'
            '[sweep]\nalpha_grid = [0.5, 1.0]\nbeta_grid = [1.0]\n'
            'horizon = 5.0\n'
        )
        assert run("sweep", "--config", str(config), "--dt", "0.05",
                   "--out", str(tmp_path)) == 0
        out = tmp_path / "sweep.csv"
        assert read_header(out) == SWEEP_COLUMNS
        with open(out, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 2
        assert all(row["valid"] == "true" for row in rows)

    def test_sweep_deterministic_across_worker_counts(self, tmp_path):
        config = tmp_path / "sweep.toml"
        config.write_text(
            '[bath1]\nexponent = 2.0\n[bath2]\nexponent = 2.0\n'
            '[sweep]\nalpha_grid = [0.5, 5.0]\nbeta_grid = [0.5, 5.0]\n'
            'horizon = 5.0\n'
        )
        for workers, sub in (("1", "a"), ("2", "b")):
            (tmp_path / sub).mkdir()
            assert run("sweep", "--config", str(config), "--dt", "0.05",
                       "--workers", workers, "--out",
                       str(tmp_path / sub)) == 0
        assert (tmp_path / "a" / "sweep.csv").read_bytes() == \
               (tmp_path / "b" / "sweep.csv").read_bytes()

    def test_sweep_without_grid_is_a_config_error(self, tmp_path, capsys):
        code = run("sweep", "--preset", "fig2-mid", "--out", str(tmp_path))
        assert code == EXIT_CONFIG
        assert "sweep" in capsys.readouterr().err

    def test_oracle_gen(self, tmp_path):
        config = tmp_path / "run.toml"
        config.write_text(
            '[bath1]\ncoupling = 0.5\nexponent = 2.0\n'
        )
        assert run("oracle-gen", "--config", str(config), "--dt", "0.1",
                   "--tmax", "1", "--out", str(tmp_path)) == 0
        assert read_header(tmp_path / "oracle_kernels.csv") == KERNEL_COLUMNS
        assert read_header(tmp_path / "oracle_rates.csv") == [
            "t", "gamma_plus", "gamma_minus", "zeta",
        ]

    def test_csv_uses_crlf_and_dot_decimal(self, tmp_path):
        assert run("kernels", "--preset", "fig2-weak", "--dt", "0.5",
                   "--tmax", "1", "--out", str(tmp_path)) == 0
        raw = (tmp_path / "kernels.csv").read_bytes()
        assert b"\r\n" in raw
        assert b"," in raw and b";" not in raw
