"""Sweeps, builtin scenarios, material/scenario file ingestion, CSV."""

import numpy as np
import pytest

import supercasimir.lifshitz
from supercasimir.lifshitz import CavityConfig, Film, HalfSpace, delta_pressure
from supercasimir.materials import Bcs, ConstantDielectric, Drude, TwoFluid, Vacuum
from supercasimir.scenarios import (
    ResponseCurveSpec,
    ScenarioError,
    SweepSpec,
    Variant,
    builtin_scenario,
    default_materials,
    load_materials,
    load_scenario,
    run_response,
    run_sweep,
)


class TestMaterialCatalog:
    def test_default_catalog_paper_values(self):
        cat = default_materials()
        au = cat.get("Au")
        assert isinstance(au, Drude)
        assert (au.params.eps0, au.params.omega_p_eV, au.params.gamma0_eV) == (
            6.3, 9.0, 0.035,
        )
        al = cat.get("Al")
        assert isinstance(al, Bcs)
        assert al.params.tc_K == 1.2
        assert al.params.drude.omega_p_eV == 13.0
        nb = cat.get("NbTiN")
        assert nb.params.tc_K == 13.6
        assert nb.params.drude.rrr == 1.12
        assert isinstance(cat.get("vacuum"), Vacuum)

    def test_unknown_material(self):
        with pytest.raises(ScenarioError, match="unknown material"):
            default_materials().get("Unobtainium")

    def test_empty_file(self, tmp_path):
        p = tmp_path / "empty.ini"
        p.write_text("")
        with pytest.raises(ScenarioError, match="no materials"):
            load_materials(p)

    def test_duplicate_name(self, tmp_path):
        p = tmp_path / "dup.ini"
        p.write_text("[Au]\nmodel = drude\neps0 = 1\nomega_p_eV = 9\n"
                     "gamma0_eV = 0.03\n[Au]\nmodel = perfect\n")
        with pytest.raises(ScenarioError, match="duplicate material 'Au'"):
            load_materials(p)

    def test_unknown_key_rejected(self, tmp_path):
        p = tmp_path / "bad.ini"
        p.write_text("[X]\nmodel = drude\neps0 = 1\nomega_p_eV = 9\n"
                     "gamma0_eV = 0.03\nbananas = 7\n")
        with pytest.raises(ScenarioError, match="bananas"):
            load_materials(p)

    def test_missing_field(self, tmp_path):
        p = tmp_path / "bad.ini"
        p.write_text("[X]\nmodel = bcs\neps0 = 1\nomega_p_eV = 9\ngamma0_eV = 0.03\n")
        with pytest.raises(ScenarioError, match="tc_K"):
            load_materials(p)

    def test_unknown_model(self, tmp_path):
        p = tmp_path / "bad.ini"
        p.write_text("[X]\nmodel = lorentz\n")
        with pytest.raises(ScenarioError, match="model must be one of"):
            load_materials(p)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ScenarioError, match="does not exist"):
            load_materials(tmp_path / "nope.ini")


class TestScenarioFile:
    def test_round_trip(self, tmp_path):
        p = tmp_path / "sweep.ini"
        p.write_text(
            "[cavity]\na_nm = 100\nT_K = 6.8\n"
            "[mirror1]\nmaterial = Au\n"
            "[mirror2]\nmaterial = NbTiN\nw_nm = 200\nsubstrate = SiN\n"
            "[sweep]\naxis = separation\nfrom = 60\nto = 200\ncount = 5\n"
            "scale = lin\nmode = both\noutput = delta_pressure\nT_ref_K = 13.6\n"
        )
        spec = load_scenario(p)
        assert spec.axis == "separation"
        assert spec.points == (60.0, 95.0, 130.0, 165.0, 200.0)
        assert spec.mode == "both"
        assert spec.t_ref_K == 13.6
        assert isinstance(spec.base.mirror2, Film)
        assert spec.base.mirror2.thickness_nm == 200.0
        assert spec.base.mirror2.substrate == ConstantDielectric(7.6)

    def test_explicit_points(self, tmp_path):
        p = tmp_path / "s.ini"
        p.write_text(
            "[cavity]\na_nm = 100\n[mirror1]\nmaterial = Au\n"
            "[mirror2]\nmaterial = NbTiN\n"
            "[sweep]\naxis = temperature\npoints = 3.4 6.8 10.2\nT_ref_K = 13.6\n"
        )
        spec = load_scenario(p)
        assert spec.points == (3.4, 6.8, 10.2)

    def test_points_and_range_conflict(self, tmp_path):
        p = tmp_path / "s.ini"
        p.write_text(
            "[cavity]\na_nm = 100\n[mirror1]\nmaterial = Au\n"
            "[mirror2]\nmaterial = NbTiN\n"
            "[sweep]\npoints = 1 2\nfrom = 1\nto = 2\n"
        )
        with pytest.raises(ScenarioError, match="either points or a range"):
            load_scenario(p)

    def test_missing_section(self, tmp_path):
        p = tmp_path / "s.ini"
        p.write_text("[cavity]\na_nm = 100\n")
        with pytest.raises(ScenarioError, match="missing \\[mirror1\\]"):
            load_scenario(p)

    def test_unknown_sweep_key(self, tmp_path):
        p = tmp_path / "s.ini"
        p.write_text(
            "[cavity]\na_nm = 100\n[mirror1]\nmaterial = Au\n"
            "[mirror2]\nmaterial = Au\n[sweep]\npoints = 1\nstyle = dotted\n"
        )
        with pytest.raises(ScenarioError, match="style"):
            load_scenario(p)


class TestSweepSpecValidation:
    def _base(self):
        cat = default_materials()
        return CavityConfig(HalfSpace(cat.get("Au")), HalfSpace(cat.get("NbTiN")),
                            100.0, 6.8)

    def test_non_monotone_points(self):
        with pytest.raises(ScenarioError, match="monotone"):
            SweepSpec("x", self._base(), "temperature", (1.0, 3.0, 2.0),
                      t_ref_K=13.6)

    def test_range_floors(self):
        with pytest.raises(ScenarioError, match="separation"):
            SweepSpec("x", self._base(), "separation", (5.0,))
        with pytest.raises(ScenarioError, match="RRR"):
            SweepSpec("x", self._base(), "rrr_sc", (0.01,))
        with pytest.raises(ScenarioError, match="temperature"):
            SweepSpec("x", self._base(), "temperature", (20.0,), t_ref_K=13.6)

    def test_unknown_axis_mode(self):
        with pytest.raises(ScenarioError, match="axis"):
            SweepSpec("x", self._base(), "humidity", (1.0,))
        with pytest.raises(ScenarioError, match="mode"):
            SweepSpec("x", self._base(), "temperature", (1.0,), mode="wild")


class TestBuiltinScenarios:
    def test_unknown_name_lists_valid(self):
        with pytest.raises(ScenarioError, match="fig10"):
            builtin_scenario("fig11")

    def test_fig6_parameterization(self):
        spec = builtin_scenario("fig6")
        assert spec.base.gap_nm == 100.0
        assert spec.mode == "both"
        assert spec.t_ref_K == 13.6
        assert isinstance(spec.base.mirror1.material, Drude)
        assert spec.base.mirror1.material.params.rrr == 1.0
        assert spec.base.mirror2.material.params.drude.rrr == 1.12
        assert [v.label for v in spec.variants] == ["eps0_1", "eps0_10"]
        assert [v.value for v in spec.variants] == [1.0, 10.0]

    def test_fig7_variants(self):
        spec = builtin_scenario("fig7")
        assert spec.axis == "separation"
        assert [v.value for v in spec.variants] == [1.12, 5.0]
        assert spec.points[0] == 60.0

    def test_fig1_is_response_curve(self):
        spec = builtin_scenario("fig1")
        assert isinstance(spec, ResponseCurveSpec)
        assert spec.kind == "g"

    def test_fig10_substrate_pair(self):
        spec = builtin_scenario("fig10")
        labels = [v.label for v in spec.variants]
        assert labels == ["freestanding", "sub_eps10"]
        assert spec.base.mirror2.substrate == Vacuum()


class TestRunSweep:
    def test_single_point_matches_direct_call(self):
        cat = default_materials()
        base = CavityConfig(HalfSpace(cat.get("Au")), HalfSpace(cat.get("NbTiN")),
                            100.0, 6.8)
        spec = SweepSpec("one", base, "temperature", (6.8,), t_ref_K=13.6)
        table = run_sweep(spec)
        direct = delta_pressure(base, 6.8, 13.6)
        assert table.rows.shape == (1, 3)
        assert table.column("deltaP_mPa")[0] == direct.delta_Pa * 1e3

    def test_csv_golden_stability(self):
        cat = default_materials()
        base = CavityConfig(HalfSpace(cat.get("Au")), HalfSpace(cat.get("NbTiN")),
                            100.0, 6.8)
        spec = SweepSpec("stab", base, "temperature", (6.8, 10.2), t_ref_K=13.6)
        c1 = run_sweep(spec).to_csv()
        c2 = run_sweep(spec).to_csv()
        assert c1 == c2
        lines = c1.splitlines()
        assert lines[0].startswith("# supercasimir v")
        assert "scenario=stab" in lines[0]
        assert lines[2] == "T_K,deltaP_mPa,err_mPa"

    def test_per_point_failure_recorded(self, monkeypatch):
        cat = default_materials()
        base = CavityConfig(HalfSpace(cat.get("Au")), HalfSpace(cat.get("NbTiN")),
                            100.0, 6.8)
        real = supercasimir.lifshitz.pressure

        def sometimes_broken(cavity, settings=None):
            if cavity.temperature_K == 6.8:
                raise RuntimeError("injected")
            return real(cavity, settings)

        import supercasimir.scenarios as sc
        monkeypatch.setattr(sc, "pressure", sometimes_broken)
        monkeypatch.setattr(sc, "delta_pressure",
                            _delta_with(sometimes_broken))
        spec = SweepSpec("part", base, "temperature", (6.8, 10.2), t_ref_K=13.6)
        table = run_sweep(spec)
        assert table.row_errors[0] is not None
        assert np.isnan(table.column("deltaP_mPa")[0])
        assert np.isfinite(table.column("deltaP_mPa")[1])

    def test_all_points_failing_raises(self, monkeypatch):
        import supercasimir.scenarios as sc

        def broken(*a, **k):
            raise RuntimeError("injected")

        monkeypatch.setattr(sc, "delta_pressure", broken)
        cat = default_materials()
        base = CavityConfig(HalfSpace(cat.get("Au")), HalfSpace(cat.get("NbTiN")),
                            100.0, 6.8)
        spec = SweepSpec("dead", base, "temperature", (6.8,), t_ref_K=13.6)
        with pytest.raises(ScenarioError, match="every point"):
            run_sweep(spec)


def _delta_with(pressure_fn):
    """delta_pressure clone bound to a patched pressure function."""
    from dataclasses import replace as _rep
    from supercasimir.lifshitz import DeltaPressureResult

    def delta(cavity, T_K, T_ref_K=None, mode="as_modeled", settings=None,
              _ref_cache=None):
        if T_ref_K is None:
            T_ref_K = 13.6
        res_T = pressure_fn(_rep(cavity, temperature_K=T_K), settings)
        res_ref = pressure_fn(_rep(cavity, temperature_K=T_ref_K), settings)
        return DeltaPressureResult(res_T.pressure_Pa - res_ref.pressure_Pa,
                                   res_T, res_ref)

    return delta


class TestFigureShapes:
    """Qualitative figure invariants on reduced grids."""

    def test_fig6_curves_negative_vanishing_and_ordered(self):
        from dataclasses import replace
        spec = builtin_scenario("fig6")
        tc = spec.t_ref_K
        small = replace(spec, points=tuple(f * tc for f in (0.3, 0.55, 0.8, 1.0)))
        table = run_sweep(small)
        t = table.column("T_K")
        below = t < tc
        for col in ("deltaP_mPa__eps0_1", "deltaP_mPa__eps0_10", "deltaP_normal_mPa"):
            vals = table.column(col)
            assert np.all(vals <= 0)
            assert vals[~below][0] == 0.0  # vanishes at Tc
        assert np.all(
            table.column("deltaP_mPa__eps0_1")[below]
            <= table.column("deltaP_normal_mPa")[below]
        )

    def test_fig7_magnitude_decreases_with_separation(self):
        from dataclasses import replace
        spec = builtin_scenario("fig7")
        small = replace(spec, points=(60.0, 100.0, 160.0, 250.0))
        table = run_sweep(small)
        for col in ("deltaP_mPa__rrr_1p12", "deltaP_mPa__rrr_5"):
            mags = np.abs(table.column(col))
            assert np.all(np.diff(mags) < 0)

    def test_fig9_magnitude_increases_with_au_rrr(self):
        from dataclasses import replace
        spec = builtin_scenario("fig9")
        small = replace(spec, points=(1.0, 3.0, 10.0),
                        variants=(spec.variants[0],))  # a = 100 nm curve
        table = run_sweep(small)
        mags = np.abs(table.column("deltaP_mPa__a_100nm"))
        assert np.all(np.diff(mags) > 0)


class TestResponseCurves:
    def test_fig1_columns_and_monotonicity(self):
        spec = builtin_scenario("fig1")
        small = ResponseCurveSpec(spec.name, spec.kind, spec.params,
                                  spec.temps_over_tc,
                                  tuple(np.geomspace(1e-3, 1e3, 31).tolist()))
        table = run_response(small)
        assert table.columns[0] == "xi_over_2delta0"
        x = table.column("xi_over_2delta0")
        g01 = table.column("g__T0p1")
        g09 = table.column("g__T0p9")
        # strictly decreasing above xi ~ Delta; shallow low-xi rise allowed
        assert np.all(np.diff(g01[x >= 0.5]) < 0)
        assert np.all(np.diff(g09[x >= 0.5]) < 0)
        assert np.all(g01 > 0) and np.all(g09 > 0)
        assert np.all(g01 > g09)

    def test_fig2_ordering(self):
        spec = builtin_scenario("fig2")
        small = ResponseCurveSpec(spec.name, spec.kind, spec.params,
                                  spec.temps_over_tc,
                                  tuple(np.geomspace(1e-2, 1e2, 21).tolist()))
        table = run_response(small)
        assert np.all(table.column("eps_twofluid__T0p1") >= table.column("eps_bcs__T0p1"))
        assert np.all(table.column("eps_bcs__T0p1") >= table.column("eps_drude"))
