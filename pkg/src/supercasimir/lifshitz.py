"""Lifshitz pressure between plane-parallel mirrors.

Implements the finite-temperature Lifshitz formula as a primed Matsubara
sum of transverse-momentum integrals over TE/TM reflection coefficients,
for half-space and film-on-substrate mirrors.  The l = 0 term is handled
by the analytic zero-frequency limits of the reflection coefficients
(never by evaluating the singular metal permittivities at tiny xi).

Negative pressures correspond to attraction.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Union

import numpy as np
from scipy.special import roots_laguerre

from .constants import CONSTANTS
from .numerics import QuadResult, SumDiagnostics, integrate_semi_infinite, matsubara_sum
from . import materials as mat
from .materials import (
    Bcs,
    ConstantDielectric,
    Dielectric,
    FrequencyResponse,
    MaterialModel,
    PerfectConductor,
    PlasmaLike,
    TEVanishing,
    TwoFluid,
    Vacuum,
)

__all__ = [
    "HalfSpace",
    "Film",
    "Mirror",
    "CavityConfig",
    "PressureSettings",
    "PressureResult",
    "DeltaPressureResult",
    "fresnel",
    "mirror_reflection",
    "pressure",
    "delta_pressure",
    "normal_state_cavity",
    "reference_temperature",
]

_KB = CONSTANTS.kB_eV_per_K
_HBAR_C = CONSTANTS.hbar_c_eV_nm
_PA = CONSTANTS.pa_per_eV_nm3


class CavityError(ValueError):
    """Invalid cavity geometry or material placement."""


@dataclass(frozen=True)
class HalfSpace:
    material: MaterialModel


@dataclass(frozen=True)
class Film:
    """Film of thickness_nm on a substrate; Vacuum substrate = free-standing."""

    film: MaterialModel
    thickness_nm: float
    substrate: MaterialModel = Vacuum()

    def __post_init__(self):
        if self.thickness_nm <= 0:
            raise CavityError("film thickness must be positive")


Mirror = Union[HalfSpace, Film]


@dataclass(frozen=True)
class CavityConfig:
    mirror1: Mirror
    mirror2: Mirror
    gap_nm: float
    temperature_K: float

    def __post_init__(self):
        if self.gap_nm <= 0:
            raise CavityError("gap must be positive")
        if self.temperature_K <= 0:
            raise CavityError("temperature must be positive")
        for m in (self.mirror1, self.mirror2):
            if isinstance(m, Film):
                if isinstance(m.film, PerfectConductor) or isinstance(
                    m.substrate, PerfectConductor
                ):
                    raise CavityError(
                        "perfect conductor is only legal as a half-space material"
                    )


@dataclass(frozen=True)
class PressureSettings:
    """Tolerance and engine knobs for a pressure evaluation.

    tol_abs_Pa is the absolute target for the Matsubara truncation tail of
    one pressure; a pressure difference of two evaluations then carries at
    most twice this.  The defaults leave three digits of headroom on the
    paper-scale delta-P (~1e-5..1e-3 Pa).
    """

    tol_abs_Pa: float = 5e-9
    cutoff_ratio: float = 1e-10
    g_table_tol: float = 1e-8
    # y at which the kernel integral hands off from log-spaced
    # Gauss-Kronrod panels to the Gauss-Laguerre tail rule
    gl_handoff_y: float = 4.0


@dataclass(frozen=True)
class PressureResult:
    """Pressure with convergence diagnostics (negative = attraction)."""

    pressure_Pa: float
    sum_diag: SumDiagnostics
    quad_error_Pa: float

    @property
    def total_error_Pa(self) -> float:
        return self.quad_error_Pa + self.sum_diag.truncation_bound


@dataclass(frozen=True)
class DeltaPressureResult:
    """Pressure variation P(T) - P(T_ref) with both endpoint results."""

    delta_Pa: float
    at_T: PressureResult
    at_ref: PressureResult

    @property
    def combined_error_Pa(self) -> float:
        return self.at_T.total_error_Pa + self.at_ref.total_error_Pa


def fresnel(eps: float, hbar_xi_eV: float, k_perp_nm: float, pol: str):
    """Vacuum-interface Fresnel coefficient at imaginary frequency.

    r_TE = (q - s)/(q + s), r_TM = (eps*q - s)/(eps*q + s) with
    q = sqrt(xi^2/c^2 + k_perp^2) and s = sqrt(eps*xi^2/c^2 + k_perp^2);
    real-valued, TM in [0, 1] and TE in (-1, 0] for eps >= 1.
    """
    eps = np.asarray(eps, dtype=float)
    xic = np.asarray(hbar_xi_eV, dtype=float) / _HBAR_C
    kp = np.asarray(k_perp_nm, dtype=float)
    if np.any(eps < 1.0):
        raise CavityError("fresnel requires eps >= 1")
    if np.any((xic == 0.0) & (kp == 0.0)):
        raise CavityError("xi and k_perp cannot both vanish")
    # same algebraic form for q and s so eps = 1 gives r = 0 exactly
    q = np.sqrt(xic * xic + kp * kp)
    s = np.sqrt(eps * xic * xic + kp * kp)
    if pol == "TE":
        r = (q - s) / (q + s)
    elif pol == "TM":
        r = (eps * q - s) / (eps * q + s)
    else:
        raise CavityError(f"unknown polarization {pol!r}")
    return float(r) if r.ndim == 0 else r


def mirror_reflection(mirror: Mirror, hbar_xi_eV: float, k_perp_nm: float,
                      pol: str, T_K: float):
    """Reflection coefficient of a half-space or film-on-substrate mirror.

    The film composition is
    r = (r01 + r12*exp(-2*w*K1)) / (1 + r01*r12*exp(-2*w*K1))
    with K1 = sqrt(eps_film*xi^2/c^2 + k_perp^2); permittivities are
    evaluated directly (the ground-truth path, no caching).
    """
    xi = float(hbar_xi_eV)
    if isinstance(mirror, HalfSpace):
        m = mirror.material
        if isinstance(m, PerfectConductor):
            return 1.0 if pol == "TM" else -1.0
        return fresnel(mat.permittivity(m, xi, T_K), xi, k_perp_nm, pol)
    xic = xi / _HBAR_C
    kp = np.asarray(k_perp_nm, dtype=float)
    q = np.hypot(xic, kp)
    ef = mat.permittivity(mirror.film, xi, T_K)
    es = mat.permittivity(mirror.substrate, xi, T_K)
    k1 = np.sqrt(ef * xic * xic + kp * kp)
    k2 = np.sqrt(es * xic * xic + kp * kp)
    if pol == "TE":
        r01 = (q - k1) / (q + k1)
        r12 = (k1 - k2) / (k1 + k2)
    else:
        r01 = (ef * q - k1) / (ef * q + k1)
        r12 = (es * k1 - ef * k2) / (es * k1 + ef * k2)
    e2 = np.exp(-2.0 * mirror.thickness_nm * k1)
    r = (r01 + r12 * e2) / (1.0 + r01 * r12 * e2)
    return float(r) if np.ndim(r) == 0 else r


def normal_state_cavity(cavity: CavityConfig) -> CavityConfig:
    """Replace every superconducting material by its embedded Drude model."""

    def fix_mirror(m: Mirror) -> Mirror:
        if isinstance(m, HalfSpace):
            return HalfSpace(mat.normal_state(m.material))
        return Film(mat.normal_state(m.film), m.thickness_nm,
                    mat.normal_state(m.substrate))

    return replace(cavity, mirror1=fix_mirror(cavity.mirror1),
                   mirror2=fix_mirror(cavity.mirror2))


def reference_temperature(cavity: CavityConfig) -> float:
    """Largest critical temperature among the cavity's superconductors."""
    tcs = []
    for m in (cavity.mirror1, cavity.mirror2):
        layers = [m.material] if isinstance(m, HalfSpace) else [m.film, m.substrate]
        for layer in layers:
            if isinstance(layer, (Bcs, TwoFluid)):
                tcs.append(layer.params.tc_K)
    if not tcs:
        raise CavityError(
            "no superconducting material in the cavity; pass T_ref explicitly"
        )
    return max(tcs)


# ---------------------------------------------------------------------------
# Pressure engine.
#
# After the substitution y = 2*a*q the l-th Matsubara term is
#   term(l) = (kB*T)/(8*pi*a^3) * Integral_{y_l}^{inf} y^2 dy
#             * Sum_pol [exp(y)/(r1*r2) - 1]^(-1),     y_l = 2*a*xi_l/c,
# and P = -(0.5*term(0) + Sum_{l>=1} term(l)).  Terms are evaluated in
# vectorized blocks: log-spaced Gauss-Kronrod panels resolve the
# near-pole region y ~ y_l at small y_l, and a Gauss-Laguerre pair (24/48
# nodes, difference = error estimate) integrates the smooth exponential
# tail to infinity.


_GL24_X, _GL24_W = roots_laguerre(24)
_GL48_X, _GL48_W = roots_laguerre(48)
_GL24_WMOD = _GL24_W * np.exp(_GL24_X)
_GL48_WMOD = _GL48_W * np.exp(_GL48_X)

from .numerics import _GK_NODES, _GK_WK, _GK_WG  # noqa: E402  (shared rule)


class _LayerEval:
    """Cached permittivity of one material layer at fixed temperature."""

    def __init__(self, model: MaterialModel, T_K: float, table_tol: float):
        self.model = model
        self.response = FrequencyResponse(model, T_K, table_tol)
        self.is_perfect = isinstance(model, PerfectConductor)

    def eps(self, xi_col: np.ndarray) -> np.ndarray:
        return self.response.eps(xi_col)


class _MirrorEval:
    """Vectorized TE/TM reflection of one mirror on (l, y) node grids."""

    def __init__(self, mirror: Mirror, T_K: float, table_tol: float):
        self.mirror = mirror
        if isinstance(mirror, HalfSpace):
            self.top = _LayerEval(mirror.material, T_K, table_tol)
            self.sub = None
            self.w = None
        else:
            self.top = _LayerEval(mirror.film, T_K, table_tol)
            self.sub = _LayerEval(mirror.substrate, T_K, table_tol)
            self.w = mirror.thickness_nm
        self._zero = _ZeroFreqMirror(mirror, T_K)

    def rr(self, xi_col: np.ndarray, xic2_col: np.ndarray, q: np.ndarray):
        """Return (r_TE, r_TM) arrays on the (L, M) node grid, xi > 0."""
        if self.sub is None:
            if self.top.is_perfect:
                return -np.ones_like(q), np.ones_like(q)
            if isinstance(self.top.model, Vacuum):
                z = np.zeros_like(q)
                return z, z
            ef = self.top.eps(xi_col[:, 0])[:, None]
            s = np.sqrt(q * q + (ef - 1.0) * xic2_col)
            return (q - s) / (q + s), (ef * q - s) / (ef * q + s)
        ef = self.top.eps(xi_col[:, 0])[:, None]
        es = self.sub.eps(xi_col[:, 0])[:, None]
        k1 = np.sqrt(q * q + (ef - 1.0) * xic2_col)
        k2 = np.sqrt(q * q + (es - 1.0) * xic2_col)
        e2 = np.exp(-2.0 * self.w * k1)
        r01 = (q - k1) / (q + k1)
        r12 = (k1 - k2) / (k1 + k2)
        rte = (r01 + r12 * e2) / (1.0 + r01 * r12 * e2)
        r01 = (ef * q - k1) / (ef * q + k1)
        r12 = (es * k1 - ef * k2) / (es * k1 + ef * k2)
        rtm = (r01 + r12 * e2) / (1.0 + r01 * r12 * e2)
        return rte, rtm

    def rr_zero(self, kp: np.ndarray):
        return self._zero.rr(kp)


class _ZeroFreqMirror:
    """Analytic xi = 0 reflection from the material classifications."""

    def __init__(self, mirror: Mirror, T_K: float):
        if isinstance(mirror, HalfSpace):
            self.top = mat.zero_frequency_behavior(mirror.material, T_K)
            self.sub = None
            self.w = None
        else:
            self.top = mat.zero_frequency_behavior(mirror.film, T_K)
            self.sub = mat.zero_frequency_behavior(mirror.substrate, T_K)
            self.w = mirror.thickness_nm

    @staticmethod
    def _kappa(cls) -> float:
        """TE penetration scale (1/nm); 0 unless plasma-like."""
        if isinstance(cls, PlasmaLike):
            return (
                math.inf if math.isinf(cls.omega_eff_eV)
                else cls.omega_eff_eV / _HBAR_C
            )
        return 0.0

    @staticmethod
    def _is_metal(cls) -> bool:
        return isinstance(cls, (PlasmaLike, TEVanishing))

    def rr(self, kp: np.ndarray):
        """Return (r_TE, r_TM) at xi = 0 on the k_perp array."""
        if self.sub is None:
            rte = self._te_interface(kp, 0.0, self._kappa(self.top))
            if self._is_metal(self.top):
                rtm = np.ones_like(kp)
            else:
                e = self.top.eps
                rtm = np.full_like(kp, (e - 1.0) / (e + 1.0))
            return rte, rtm
        kf = self._kappa(self.top)
        ks = self._kappa(self.sub)
        k1 = np.hypot(kp, kf)
        r01 = self._te_interface(kp, 0.0, kf)
        r12 = self._te_interface(kp, kf, ks)
        e2 = np.exp(-2.0 * self.w * k1)
        rte = (r01 + r12 * e2) / (1.0 + r01 * r12 * e2)
        if self._is_metal(self.top):
            rtm = np.ones_like(kp)
        else:
            ef = self.top.eps
            r01 = (ef - 1.0) / (ef + 1.0)
            if self._is_metal(self.sub):
                r12 = 1.0
            else:
                es = self.sub.eps
                r12 = (es - ef) / (es + ef)
            e2 = np.exp(-2.0 * self.w * kp)
            rtm = (r01 + r12 * e2) / (1.0 + r01 * r12 * e2)
        return rte, rtm

    @staticmethod
    def _te_interface(kp: np.ndarray, kappa_i: float, kappa_j: float):
        """TE reflection between media with penetration scales kappa."""
        if math.isinf(kappa_j):
            return -np.ones_like(kp)
        if math.isinf(kappa_i):
            return np.ones_like(kp)
        ki = np.hypot(kp, kappa_i)
        kj = np.hypot(kp, kappa_j)
        return (ki - kj) / (ki + kj)


def _bose_sum(y: np.ndarray, rr_te: np.ndarray, rr_tm: np.ndarray) -> np.ndarray:
    """y^2 * sum_pol [exp(y)/(r1 r2) - 1]^(-1), safe at r1 r2 = 0."""
    emy = np.exp(-y)
    te = rr_te * emy
    tm = rr_tm * emy
    return y * y * (te / (1.0 - te) + tm / (1.0 - tm))


class _Engine:
    def __init__(self, cavity: CavityConfig, settings: PressureSettings):
        self.a = cavity.gap_nm
        self.T = cavity.temperature_K
        self.settings = settings
        self.m1 = _MirrorEval(cavity.mirror1, self.T, settings.g_table_tol)
        self.m2 = (
            self.m1 if cavity.mirror2 == cavity.mirror1
            else _MirrorEval(cavity.mirror2, self.T, settings.g_table_tol)
        )
        self.kT = _KB * self.T
        self.xi1 = 2.0 * math.pi * self.kT
        self.ycoef = 2.0 * self.a / _HBAR_C
        self.C_pa = self.kT / (8.0 * math.pi * self.a**3) * _PA
        self.quad_errors_Pa: list[float] = []

    def _kernel(self, xi_col: np.ndarray, y: np.ndarray) -> np.ndarray:
        xic2 = (xi_col / _HBAR_C) ** 2
        q = y * (0.5 / self.a)
        rte1, rtm1 = self.m1.rr(xi_col, xic2, q)
        rte2, rtm2 = self.m2.rr(xi_col, xic2, q)
        return _bose_sum(y, rte1 * rte2, rtm1 * rtm2)

    def zero_term(self) -> tuple[float, float]:
        """Half-weight l=0 integral and its error bound (unscaled units)."""

        def f(y: np.ndarray) -> np.ndarray:
            kp = y * (0.5 / self.a)
            rte1, rtm1 = self.m1.rr_zero(kp)
            rte2, rtm2 = self.m2.rr_zero(kp)
            return _bose_sum(y, rte1 * rte2, rtm1 * rtm2)

        tol_units = self.settings.tol_abs_Pa / self.C_pa
        res = integrate_semi_infinite(
            f, transform="exp_decay", tol_rel=1e-13, tol_abs=tol_units * 0.05
        )
        return res.value, res.error_bound

    def term_block(self, ls: np.ndarray) -> np.ndarray:
        """Pa-scaled Matsubara terms for an ascending index block."""
        if ls[0] == 0:
            v, e = self.zero_term()
            # the l=0 term enters the primed sum at half weight
            self.quad_errors_Pa.append(0.5 * e * self.C_pa)
            return np.array([v * self.C_pa])
        xi = self.xi1 * ls.astype(float)
        y0 = self.ycoef * xi
        handoff = self.settings.gl_handoff_y
        n_panels = (
            0 if y0[0] >= handoff
            else max(1, int(math.ceil(math.log2(handoff / y0[0]))))
        )
        xi_col = xi[:, None]
        # node layout: [panels | GL24 | GL48]
        if n_panels:
            pow2 = 2.0 ** np.arange(n_panels + 1)
            edges = y0[:, None] * pow2[None, :]
            halves = 0.5 * (edges[:, 1:] - edges[:, :-1])  # (L, K)
            mids = 0.5 * (edges[:, 1:] + edges[:, :-1])
            ynodes = (
                mids[:, :, None] + halves[:, :, None] * _GK_NODES[None, None, :]
            ).reshape(len(ls), -1)
            y_gl0 = edges[:, -1]
        else:
            ynodes = np.empty((len(ls), 0))
            y_gl0 = y0
        y24 = y_gl0[:, None] + _GL24_X[None, :]
        y48 = y_gl0[:, None] + _GL48_X[None, :]
        fall = self._kernel(xi_col, np.concatenate([ynodes, y24, y48], axis=1))
        npn = ynodes.shape[1]
        if n_panels:
            fp = fall[:, :npn].reshape(len(ls), n_panels, 15)
            k15 = (fp @ _GK_WK) * halves
            g7 = (fp @ _GK_WG) * halves
            val_p = k15.sum(axis=1)
            err_p = np.abs(k15 - g7).sum(axis=1)
        else:
            val_p = np.zeros(len(ls))
            err_p = np.zeros(len(ls))
        gl24 = fall[:, npn:npn + 24] @ _GL24_WMOD
        gl48 = fall[:, npn + 24:] @ _GL48_WMOD
        vals = val_p + gl48
        errs = err_p + np.abs(gl48 - gl24)
        self.quad_errors_Pa.append(float(errs.sum()) * self.C_pa)
        return vals * self.C_pa


def pressure(cavity: CavityConfig, settings: PressureSettings | None = None) -> PressureResult:
    """Casimir pressure of the cavity in Pa (negative = attraction).

    Matsubara terms are evaluated in fixed vectorized blocks and reduced
    with compensated summation; the result is deterministic and
    independent of any parallelism.  Reported quad_error_Pa accumulates
    the per-term quadrature error bounds; the Matsubara truncation bound
    is in ``sum_diag.truncation_bound`` (both in Pa).
    """
    settings = settings or PressureSettings()
    eng = _Engine(cavity, settings)
    value, diag = matsubara_sum(
        eng.term_block,
        cavity.temperature_K,
        cutoff_ratio=settings.cutoff_ratio,
        tol_abs=settings.tol_abs_Pa,
        vectorized=True,
    )
    return PressureResult(
        pressure_Pa=-value,
        sum_diag=diag,
        quad_error_Pa=math.fsum(eng.quad_errors_Pa),
    )


def delta_pressure(
    cavity: CavityConfig,
    T_K: float,
    T_ref_K: float | None = None,
    mode: str = "as_modeled",
    settings: PressureSettings | None = None,
    _ref_cache: dict | None = None,
) -> DeltaPressureResult:
    """Pressure variation delta-P = P(T) - P(T_ref) across the transition.

    ``T_ref_K`` defaults to the largest critical temperature in the
    cavity.  In 'force_normal_state' mode every superconducting material
    is evaluated as its embedded Drude model at both temperatures (the
    no-transition reference of the figures).  Both pressures use identical
    settings; T == T_ref returns exactly 0 from a single computation.
    """
    if mode not in ("as_modeled", "force_normal_state"):
        raise CavityError(f"unknown mode {mode!r}")
    settings = settings or PressureSettings()
    if T_ref_K is None:
        T_ref_K = reference_temperature(cavity)
    if not 0.0 < T_K <= T_ref_K:
        raise CavityError("delta_pressure requires 0 < T <= T_ref")
    work = normal_state_cavity(cavity) if mode == "force_normal_state" else cavity
    if T_K == T_ref_K:
        res = pressure(replace(work, temperature_K=T_K), settings)
        return DeltaPressureResult(delta_Pa=0.0, at_T=res, at_ref=res)
    res_T = pressure(replace(work, temperature_K=T_K), settings)
    # At T_ref >= every Tc the as-modeled and normal-state references are
    # mathematically identical (g and n_s vanish), so cache them together.
    ref_cavity = replace(work, temperature_K=T_ref_K)
    try:
        if T_ref_K >= reference_temperature(cavity):
            ref_cavity = normal_state_cavity(ref_cavity)
    except CavityError:
        pass
    if _ref_cache is not None and ref_cavity in _ref_cache:
        res_ref = _ref_cache[ref_cavity]
    else:
        res_ref = pressure(ref_cavity, settings)
        if _ref_cache is not None:
            _ref_cache[ref_cavity] = res_ref
    delta = res_T.pressure_Pa - res_ref.pressure_Pa
    combined = res_T.total_error_Pa + res_ref.total_error_Pa
    if abs(delta) < 10.0 * combined:
        warnings.warn(
            f"|delta P| = {abs(delta):.3e} Pa is below 10x the combined "
            f"error bound {combined:.3e} Pa",
            stacklevel=2,
        )
    return DeltaPressureResult(delta_Pa=delta, at_T=res_T, at_ref=res_ref)
