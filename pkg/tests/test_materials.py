"""Permittivity models, BCS gap, and the Mattis-Bardeen g function."""

import math

import numpy as np
import pytest

from supercasimir.constants import CONSTANTS
from supercasimir.materials import (
    Bcs,
    BcsParams,
    ConstantDielectric,
    Dielectric,
    Drude,
    DrudeParams,
    GapProfile,
    MaterialError,
    PerfectConductor,
    PlasmaLike,
    TEVanishing,
    TwoFluid,
    Vacuum,
    bcs_gap,
    dirty_limit_ratio,
    g_function,
    g_table,
    permittivity,
    superfluid_fraction,
    zero_frequency_behavior,
)
from supercasimir.testing import g_trapezoid_oracle

KB = CONSTANTS.kB_eV_per_K


class TestBcsGap:
    def test_closes_at_tc(self):
        assert bcs_gap(GapProfile(1.2), 1.2) == 0.0
        assert bcs_gap(GapProfile(1.2), 5.0) == 0.0

    def test_zero_temperature_values(self):
        # paper values: Delta(0) = 1.8e-4 eV (Al), 2.1e-3 eV (NbTiN)
        assert abs(bcs_gap(GapProfile(1.2), 0.0) - 1.8e-4) / 1.8e-4 < 0.015
        assert abs(bcs_gap(GapProfile(13.6), 0.0) - 2.1e-3) / 2.1e-3 < 0.02

    def test_zero_limit_is_c1_c2_kb_tc(self):
        p = GapProfile(4.2)
        assert bcs_gap(p, 0.0) == p.c1 * p.c2 * KB * p.tc_K

    def test_continuous_at_tc(self):
        p = GapProfile(9.3)
        assert bcs_gap(p, 9.3 * (1 - 1e-12)) < 1e-8
        assert bcs_gap(p, 9.3) == 0.0

    def test_negative_temperature_rejected(self):
        with pytest.raises(MaterialError):
            bcs_gap(GapProfile(1.2), -0.1)

    def test_fit_shape(self):
        # The weak-coupling fit rises ~3% above Delta(0+) with a maximum
        # near t = 0.237 and decreases monotonically beyond; it is NOT
        # monotone on all of (0, Tc).
        p = GapProfile(1.0)
        t = np.linspace(0.24, 1.0, 200)
        d = np.array([bcs_gap(p, x) for x in t])
        assert np.all(np.diff(d) < 0)
        t_max = (2 * p.c3 - p.c2) / (3 * p.c3)
        assert bcs_gap(p, t_max) > bcs_gap(p, 1e-12)
        assert bcs_gap(p, t_max) < 1.04 * bcs_gap(p, 0.0)


class TestSuperfluidFraction:
    def test_step_at_tc(self):
        assert superfluid_fraction(13.6, 13.6) == 0.0
        assert superfluid_fraction(13.6, 20.0) == 0.0

    def test_full_at_zero(self):
        assert superfluid_fraction(13.6, 0.0) == 1.0

    def test_half_tc(self):
        assert superfluid_fraction(2.0, 1.0) == 0.9375


class TestGFunction:
    def test_vanishes_at_and_above_tc(self, nbtin_params):
        assert g_function(1e-3, 13.6, nbtin_params) == 0.0
        assert g_function(0.0, 20.0, nbtin_params) == 0.0

    def test_high_frequency_decay(self, nbtin_params):
        T = 0.5 * nbtin_params.tc_K
        delta = bcs_gap(GapProfile(nbtin_params.tc_K), T)
        xi = 1e4 * delta
        g = g_function(xi, T, nbtin_params)
        assert 0.0 < g < 1e-3
        oracle = g_trapezoid_oracle(xi, T, nbtin_params)
        assert abs(g - oracle) <= 1e-6 * abs(oracle)

    def test_zero_frequency_limit(self, nbtin_params):
        # finite 0 < g(0) < 1, matched by the trapezoid oracle
        T = 0.5 * nbtin_params.tc_K
        g0 = g_function(0.0, T, nbtin_params)
        assert 0.0 < g0 < 1.0
        oracle = g_trapezoid_oracle(0.0, T, nbtin_params)
        assert abs(g0 - oracle) <= 1e-6 * abs(oracle)

    def test_zero_frequency_limit_matches_small_xi(self, al_params):
        # independent consistency: evaluating at xi -> 0+ approaches g(0)
        T = 0.5 * al_params.tc_K
        delta = bcs_gap(GapProfile(al_params.tc_K), T)
        g0 = g_function(0.0, T, al_params)
        g_small = g_function(1e-7 * delta, T, al_params, tol=1e-12)
        assert abs(g_small - g0) < 1e-5 * g0

    def test_positive_and_decreasing(self, al_params):
        # strictly decreasing above xi ~ Delta; below, the xi*ln(Delta/xi)
        # term of the small-xi expansion allows a shallow rise
        T = 0.5 * al_params.tc_K
        delta0 = bcs_gap(GapProfile(al_params.tc_K), 0.0)
        x = np.geomspace(1e-3, 1e3, 40)
        xi = x * 2 * delta0
        g = np.array([g_function(v, T, al_params) for v in xi])
        assert np.all(g > 0)
        assert np.all(np.diff(g[x >= 0.5]) < 0)
        assert np.all(np.diff(g) < 0.1 * g.max())

    def test_negative_xi_rejected(self, al_params):
        with pytest.raises(MaterialError):
            g_function(-1.0, 0.5, al_params)


class TestPermittivity:
    def test_drude_gold_hand_value(self, au_params):
        # eps0 + Omega^2/(xi(xi+gamma)) at hbar*xi = 1 eV: 6.3 + 81/1.035
        val = permittivity(Drude(au_params), 1.0, 300.0)
        assert abs(val - (6.3 + 81.0 / 1.035)) < 1e-12

    def test_twofluid_equals_drude_at_tc(self, nbtin_params):
        xi = np.geomspace(1e-4, 10.0, 17)
        tf = permittivity(TwoFluid(nbtin_params), xi, nbtin_params.tc_K)
        dr = permittivity(Drude(nbtin_params.drude), xi, nbtin_params.tc_K)
        assert np.array_equal(tf, dr)

    def test_bcs_exceeds_drude_and_approaches_it(self, nbtin_params):
        T = 0.1 * nbtin_params.tc_K
        delta0 = bcs_gap(GapProfile(nbtin_params.tc_K), 0.0)
        xi = np.geomspace(1e-2, 1e2, 25) * 2 * delta0
        bcs = np.asarray(permittivity(Bcs(nbtin_params), xi, T))
        dr = np.asarray(permittivity(Drude(nbtin_params.drude), xi, T))
        assert np.all(bcs >= dr)
        ratios = bcs / dr
        assert ratios[-1] < 1.01
        assert ratios[0] > ratios[-1]

    def test_ordering_twofluid_bcs_drude(self, nbtin_params):
        delta0 = bcs_gap(GapProfile(nbtin_params.tc_K), 0.0)
        xi = np.geomspace(1e-2, 1e2, 21) * 2 * delta0
        for f in (0.1, 0.9):
            T = f * nbtin_params.tc_K
            tf = np.asarray(permittivity(TwoFluid(nbtin_params), xi, T))
            bc = np.asarray(permittivity(Bcs(nbtin_params), xi, T))
            dr = np.asarray(permittivity(Drude(nbtin_params.drude), xi, T))
            assert np.all(tf >= bc) and np.all(bc >= dr) and np.all(dr >= 1.0)

    def test_metal_models_real_finite_monotone(self, nbtin_params):
        xi = np.geomspace(1e-4, 50.0, 30)
        for model in (Drude(nbtin_params.drude), Bcs(nbtin_params),
                      TwoFluid(nbtin_params)):
            eps = np.asarray(permittivity(model, xi, 0.3 * nbtin_params.tc_K))
            assert np.all(np.isfinite(eps)) and np.all(eps >= 1.0)
            assert np.all(np.diff(eps) < 0)

    def test_constant_and_vacuum(self):
        assert permittivity(ConstantDielectric(7.6), 0.5, 1.0) == 7.6
        assert permittivity(Vacuum(), 0.5, 1.0) == 1.0

    def test_domain_errors(self, au_params):
        with pytest.raises(MaterialError):
            permittivity(Drude(au_params), 0.0, 1.0)
        with pytest.raises(MaterialError):
            permittivity(Drude(au_params), -1.0, 1.0)
        with pytest.raises(MaterialError):
            permittivity(PerfectConductor(), 1.0, 1.0)


class TestZeroFrequency:
    def test_drude_te_vanishing(self, au_params):
        assert isinstance(zero_frequency_behavior(Drude(au_params), 4.0),
                          TEVanishing)

    def test_bcs_at_tc_te_vanishing(self, nbtin_params):
        assert isinstance(
            zero_frequency_behavior(Bcs(nbtin_params), nbtin_params.tc_K),
            TEVanishing,
        )

    def test_twofluid_plasma_like(self, nbtin_params):
        z = zero_frequency_behavior(TwoFluid(nbtin_params), 0.5 * nbtin_params.tc_K)
        assert isinstance(z, PlasmaLike)
        assert abs(z.omega_eff_eV
                   - nbtin_params.drude.omega_p_eV * math.sqrt(0.9375)) < 1e-12

    def test_bcs_plasma_like_below_tc(self, nbtin_params):
        T = 0.5 * nbtin_params.tc_K
        z = zero_frequency_behavior(Bcs(nbtin_params), T)
        assert isinstance(z, PlasmaLike)
        g0 = g_function(0.0, T, nbtin_params)
        assert abs(z.omega_eff_eV
                   - nbtin_params.drude.omega_p_eV * math.sqrt(g0)) < 1e-9

    def test_dielectric_and_perfect(self):
        assert zero_frequency_behavior(ConstantDielectric(4.0), 1.0) == Dielectric(4.0)
        assert zero_frequency_behavior(Vacuum(), 1.0) == Dielectric(1.0)
        z = zero_frequency_behavior(PerfectConductor(), 1.0)
        assert isinstance(z, PlasmaLike) and math.isinf(z.omega_eff_eV)


class TestDirtyLimit:
    def test_paper_values(self, al_params, nbtin_params):
        assert abs(dirty_limit_ratio(al_params) - 5.7e-3) / 5.7e-3 < 0.02
        assert abs(dirty_limit_ratio(nbtin_params) - 1.4e-2) / 1.4e-2 < 0.02

    def test_large_gamma_limit(self):
        p = BcsParams(DrudeParams(1.0, 5.0, 1e6, 1.0), 10.0)
        assert dirty_limit_ratio(p) < 1e-8


class TestGTable:
    def test_reproduces_g_function(self, nbtin_params):
        T = 0.5 * nbtin_params.tc_K
        delta0 = bcs_gap(GapProfile(nbtin_params.tc_K), 0.0)
        xi_min = 5e-4 * delta0
        table = g_table(nbtin_params, T, xi_max_eV=100.0 * delta0, tol=1e-8,
                        xi_min_eV=xi_min)
        rng = np.random.default_rng(42)
        xi = np.exp(rng.uniform(math.log(xi_min), math.log(table.xi_max_eV), 100))
        got = table.eval(xi)
        want = np.array([g_function(x, T, nbtin_params) for x in xi])
        assert np.max(np.abs(got - want)) <= 1e-8

    def test_above_tc_identically_zero(self, nbtin_params):
        table = g_table(nbtin_params, nbtin_params.tc_K, 1.0)
        assert table.identically_zero
        assert np.array_equal(table.eval(np.array([0.0, 1.0, 5.0])), np.zeros(3))

    def test_monotone_grid_and_tail(self, al_params):
        T = 0.5 * al_params.tc_K
        delta0 = bcs_gap(GapProfile(al_params.tc_K), 0.0)
        table = g_table(al_params, T, xi_max_eV=50.0 * delta0, tol=1e-8,
                        xi_min_eV=1e-3 * delta0)
        # monotone outside the documented shallow low-xi rise (< 1e-6 here)
        assert np.all(np.diff(table.grid_g) <= 1e-6)
        assert np.all(np.diff(table.grid_g[table.grid_xi >= delta0]) < 0)
        assert table.tail_bound < 1e-8
        beyond = table.eval(np.array([table.xi_max_eV * 10.0]))
        assert beyond[0] == 0.0
        assert table.eval(np.array([0.0]))[0] == table.g0

    def test_below_range_rejected(self, al_params):
        T = 0.5 * al_params.tc_K
        table = g_table(al_params, T, 1.0, xi_min_eV=1e-5)
        with pytest.raises(MaterialError):
            table.eval(np.array([1e-7]))


class TestParamValidation:
    def test_drude_params(self):
        with pytest.raises(MaterialError):
            DrudeParams(0.5, 9.0, 0.035)
        with pytest.raises(MaterialError):
            DrudeParams(1.0, -9.0, 0.035)
        with pytest.raises(MaterialError):
            DrudeParams(1.0, 9.0, 0.035, rrr=0.0)

    def test_bcs_params(self, au_params):
        with pytest.raises(MaterialError):
            BcsParams(au_params, 0.0)

    def test_dielectric(self):
        with pytest.raises(MaterialError):
            ConstantDielectric(0.5)
