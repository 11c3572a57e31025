"""Command-line interface behavior and exit codes."""

import re

import pytest

from supercasimir.cli import main
from supercasimir.numerics import NumericsError


def test_pressure_vacuum_zero(capsys):
    rc = main(["pressure", "--material1", "vacuum", "--material2", "vacuum",
               "--a-nm", "100", "--T-K", "1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert re.search(r"P = -?0\.0+e\+00 Pa", out)


def test_delta_fig6_headline_value(capsys):
    rc = main(["delta", "--scenario", "fig6", "--T-over-Tc", "0.5"])
    out = capsys.readouterr().out
    assert rc == 0
    m = re.search(r"deltaP = (-?\d+\.\d+e[+-]\d+) mPa", out)
    assert m, out
    val = float(m.group(1))
    assert abs(val - (-0.36)) <= 0.15 * 0.36


def test_usage_errors_exit_1(capsys):
    assert main(["delta", "--scenario", "nonsense"]) == 1
    assert main(["pressure", "--material1", "Au", "--a-nm", "100",
                 "--T-K", "1"]) == 1
    err = capsys.readouterr().err
    assert "error:" in err


def test_mutually_exclusive_temperature_flags(capsys):
    rc = main(["delta", "--scenario", "fig6", "--T-K", "5", "--T-over-Tc", "0.5"])
    assert rc == 1
    assert "error:" in capsys.readouterr().err


def test_unknown_material_exit_1(capsys):
    rc = main(["pressure", "--material1", "Kryptonite", "--material2", "Au",
               "--a-nm", "100", "--T-K", "1"])
    assert rc == 1
    assert "unknown material" in capsys.readouterr().err


def test_materials_listing(capsys):
    assert main(["materials"]) == 0
    out = capsys.readouterr().out
    for name in ("Au", "Al", "NbTiN", "SiN", "vacuum"):
        assert name in out


def test_materials_db_env_override(tmp_path, monkeypatch, capsys):
    db = tmp_path / "alt.ini"
    db.write_text("[Unobtainium]\nmodel = dielectric\neps = 3.0\n")
    monkeypatch.setenv("SUPERCASIMIR_MATERIALS", str(db))
    assert main(["materials"]) == 0
    out = capsys.readouterr().out
    assert "Unobtainium" in out
    assert "NbTiN" not in out


def test_numerical_failure_exit_2(monkeypatch, capsys):
    import supercasimir.cli as cli

    def boom(*a, **k):
        raise NumericsError("synthetic", best_value=1.0, error_bound=2.0)

    monkeypatch.setattr(cli, "pressure", boom)
    rc = main(["pressure", "--material1", "Au", "--material2", "Au",
               "--a-nm", "100", "--T-K", "1"])
    assert rc == 2
    assert "numerical failure" in capsys.readouterr().err


def test_sweep_config_and_determinism_across_threads(tmp_path, capsys):
    cfg = tmp_path / "mini.ini"
    cfg.write_text(
        "[cavity]\na_nm = 100\n[mirror1]\nmaterial = Au\n"
        "[mirror2]\nmaterial = NbTiN\n"
        "[sweep]\naxis = temperature\npoints = 6.8 10.2\nT_ref_K = 13.6\n"
    )
    out1 = tmp_path / "t1.csv"
    out2 = tmp_path / "t4.csv"
    assert main(["sweep", "--config", str(cfg), "--out", str(out1),
                 "--threads", "1"]) == 0
    assert main(["sweep", "--config", str(cfg), "--out", str(out2),
                 "--threads", "4"]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_response_fig2_csv(tmp_path):
    out = tmp_path / "fig2.csv"
    assert main(["response", "--builtin", "fig2", "--out", str(out)]) == 0
    head = out.read_text().splitlines()
    assert head[0].startswith("# supercasimir v")
    assert "scenario=fig2" in head[0]
    assert "eps_drude" in head[2]


def test_validate_only_cheap_check(capsys):
    rc = main(["validate", "--only", "dirty"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "[PASS] dirty_limit" in out


def test_validate_failure_exit_3(monkeypatch, capsys):
    import supercasimir.validate as v

    def always_red(ctx):
        return False, "synthetic failure"

    monkeypatch.setattr(v, "CHECKS", [("dirty_limit", always_red)])
    rc = main(["validate", "--only", "dirty"])
    out = capsys.readouterr().out
    assert rc == 3
    assert "[FAIL]" in out


def test_validate_unknown_filter(capsys):
    rc = main(["validate", "--only", "bogus_check_name"])
    assert rc == 1


def test_pressure_with_film_flags(capsys):
    rc = main(["pressure", "--material1", "Au", "--material2", "NbTiN",
               "--film2-nm", "200", "--substrate2", "SiN",
               "--a-nm", "100", "--T-K", "6.8"])
    out = capsys.readouterr().out
    assert rc == 0
    m = re.search(r"P = (-?\d+\.\d+e[+-]\d+) Pa", out)
    assert m and float(m.group(1)) < 0


def test_sweep_builtin_fig1_emits_response_csv(tmp_path):
    out = tmp_path / "fig1.csv"
    assert main(["sweep", "--builtin", "fig1", "--out", str(out)]) == 0
    head = out.read_text().splitlines()
    assert "scenario=fig1" in head[0]
    assert "g__T0p1" in head[2]


def test_delta_with_sc_eps0_override(capsys):
    rc = main(["delta", "--scenario", "fig6", "--T-over-Tc", "0.5",
               "--sc-eps0", "10"])
    out = capsys.readouterr().out
    assert rc == 0
    val = float(re.search(r"deltaP = (-?\d+\.\d+e[+-]\d+) mPa", out).group(1))
    # eps0 = 10 shifts the 0.5 Tc value by ~1.5%
    assert abs(val - (-0.3646)) < 0.01
