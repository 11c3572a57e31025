"""Permittivity models on the imaginary frequency axis.

Implements the Drude model, the BCS (Mattis-Bardeen, local dirty limit)
model via its analytic continuation g(xi; T), and the Casimir-Gorter
two-fluid model, together with the temperature-dependent BCS gap and the
derived zero-frequency classification used by the Lifshitz l=0 term.

Frequencies are always passed as photon energies ``hbar_xi_eV``; all
energies (gap, plasma, relaxation) are in eV and temperatures in K.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np
from scipy.interpolate import PchipInterpolator

from .constants import CONSTANTS
from .numerics import NumericsError, integrate_semi_infinite

__all__ = [
    "DrudeParams",
    "BcsParams",
    "GapProfile",
    "Drude",
    "Bcs",
    "TwoFluid",
    "ConstantDielectric",
    "PerfectConductor",
    "Vacuum",
    "MaterialModel",
    "TEVanishing",
    "PlasmaLike",
    "Dielectric",
    "bcs_gap",
    "superfluid_fraction",
    "g_function",
    "g_table",
    "GTable",
    "permittivity",
    "zero_frequency_behavior",
    "dirty_limit_ratio",
    "FrequencyResponse",
    "DIRTY_LIMIT_WARN",
]

_KB = CONSTANTS.kB_eV_per_K

DIRTY_LIMIT_WARN = 0.1


class MaterialError(ValueError):
    """Invalid material parameters or unsupported model usage."""


@dataclass(frozen=True)
class DrudeParams:
    """Drude parameters: eps(i*xi) = eps0 + Omega^2/(xi*(xi + gamma)).

    gamma is the residual relaxation energy gamma0/rrr.
    """

    eps0: float
    omega_p_eV: float
    gamma0_eV: float
    rrr: float = 1.0

    def __post_init__(self):
        if self.omega_p_eV <= 0 or self.gamma0_eV <= 0 or self.rrr <= 0:
            raise MaterialError("omega_p, gamma0 and rrr must be positive")
        if self.eps0 < 1.0:
            raise MaterialError("eps0 must be >= 1")

    @property
    def gamma_eV(self) -> float:
        return self.gamma0_eV / self.rrr


@dataclass(frozen=True)
class BcsParams:
    """Drude background plus the critical temperature of the BCS gap."""

    drude: DrudeParams
    tc_K: float

    def __post_init__(self):
        if self.tc_K <= 0:
            raise MaterialError("tc must be positive")


@dataclass(frozen=True)
class GapProfile:
    """Weak-coupling fit of the gap: Delta = c1*kB*Tc*sqrt(1-t)*(c2+c3*t)."""

    tc_K: float
    c1: float = 1.764
    c2: float = 0.9963
    c3: float = 0.7735


class _Model:
    """Base marker for permittivity model variants."""

    __slots__ = ()


@dataclass(frozen=True)
class Drude(_Model):
    params: DrudeParams


@dataclass(frozen=True)
class Bcs(_Model):
    params: BcsParams


@dataclass(frozen=True)
class TwoFluid(_Model):
    params: BcsParams


@dataclass(frozen=True)
class ConstantDielectric(_Model):
    eps: float

    def __post_init__(self):
        if self.eps < 1.0:
            raise MaterialError("dielectric constant must be >= 1")


@dataclass(frozen=True)
class PerfectConductor(_Model):
    pass


@dataclass(frozen=True)
class Vacuum(_Model):
    pass


MaterialModel = Union[Drude, Bcs, TwoFluid, ConstantDielectric, PerfectConductor, Vacuum]


# Zero-frequency classifications for the l=0 Matsubara term.


@dataclass(frozen=True)
class TEVanishing:
    """eps*xi^2 -> 0 as xi -> 0 (normal Drude metal): TE reflection vanishes."""


@dataclass(frozen=True)
class PlasmaLike:
    """eps*xi^2 -> omega_eff^2 as xi -> 0; math.inf encodes a perfect mirror."""

    omega_eff_eV: float


@dataclass(frozen=True)
class Dielectric:
    """Finite static permittivity (vacuum is eps = 1)."""

    eps: float


def bcs_gap(profile: GapProfile, T_K: float) -> float:
    """Superconducting gap Delta(T) in eV; exactly 0 for T >= Tc.

    Below Tc the weak-coupling fit
    Delta = c1*kB*Tc*sqrt(1 - T/Tc)*(c2 + c3*T/Tc) is used, so the T -> 0
    limit equals c1*c2*kB*Tc.
    """
    if T_K < 0:
        raise MaterialError("temperature must be non-negative")
    if T_K >= profile.tc_K:
        return 0.0
    t = T_K / profile.tc_K
    return profile.c1 * _KB * profile.tc_K * math.sqrt(1.0 - t) * (profile.c2 + profile.c3 * t)


def superfluid_fraction(tc_K: float, T_K: float) -> float:
    """Casimir-Gorter superfluid fraction n_s = 1 - (T/Tc)^4, 0 above Tc."""
    if T_K < 0:
        raise MaterialError("temperature must be non-negative")
    if T_K >= tc_K:
        return 0.0
    return 1.0 - (T_K / tc_K) ** 4


def _g_integrand(u: np.ndarray, hbar_xi_eV: float, delta_eV: float,
                 gamma_eV: float, kT_eV: float, u_cut: float = math.inf) -> np.ndarray:
    """Integrand of g after the substitution eps = Delta*sinh(u).

    The measure d(eps)/E collapses to du since E = Delta*cosh(u); the
    integrand is even in eps, so the caller integrates over u in (0, inf)
    and doubles.  Q uses the principal complex square root (Re >= 0).

    Re[G+] sits some 20+ orders of magnitude below |G+| at large eps, so
    the algebra below uses cancellation-free forms (Q^2 and eps^2 - Qg^2
    are expanded so that no difference of nearly equal squares occurs) and
    extended precision; beyond ``u_cut`` (where the true value is provably
    below the caller's tolerance) the integrand is taken as zero, which
    also keeps sinh(u) from overflowing.
    """
    u = np.asarray(u, dtype=np.longdouble)
    out = np.zeros(u.shape)
    live = u <= u_cut
    if not live.any():
        return out
    ul = u[live]
    x = np.longdouble(hbar_xi_eV)
    delta = np.longdouble(delta_eV)
    gamma = np.longdouble(gamma_eV)
    eps = delta * np.sinh(ul)
    E = delta * np.cosh(ul)
    eps2 = eps * eps
    # Q^2 = (E + i x)^2 - Delta^2 = eps^2 - x^2 + 2iEx  (exact identity)
    Q = np.sqrt((eps2 - x * x) + 2j * (E * x))
    Qg = Q + 1j * gamma
    A = (E * E + delta * delta) + 1j * (E * x)
    # eps^2 - Qg^2 = (x^2 + gamma^2) - 2i(Ex + gamma*Q)  (exact identity)
    D2 = (x * x + gamma * gamma) - 2j * (E * x) - 2j * (gamma * Q)
    G = (eps2 * Q + Qg * A) / (Q * D2)
    out[live] = (np.tanh(E / (2.0 * np.longdouble(kT_eV))) * G.real).astype(float)
    return out


def _g_quadrature(hbar_xi_eV: float, delta: float, gamma: float, kT: float,
                  tol: float) -> float:
    """Literal quasiparticle integral, doubled for the even integrand."""
    # Beyond u_cut the integrand is bounded by ~d/eps^2 with
    # d = O((x+gamma+Delta)^2), so the neglected tail stays below tol/4.
    d_env = 10.0 * (hbar_xi_eV + gamma + delta) ** 2
    u_cut = 0.5 * math.log(8.0 * d_env / (delta * delta * (tol / 4.0))) + 1.0
    res = integrate_semi_infinite(
        lambda u: _g_integrand(u, hbar_xi_eV, delta, gamma, kT, u_cut),
        transform="exp_decay",
        tol_rel=min(1e-10, tol),
        tol_abs=tol / 2.0,
    )
    return 2.0 * res.value


def g_function(hbar_xi_eV: float, T_K: float, params: BcsParams,
               tol: float = 1e-10) -> float:
    """Mattis-Bardeen correction g(xi; T), dimensionless.

    Identically zero for T >= Tc.  For T < Tc evaluates the quasiparticle
    integral over eps in (-inf, inf) of (1/E) tanh(E/2kT) Re[G+(i xi, eps)]
    with absolute quadrature error below ``tol``.

    xi = 0 returns the xi -> 0+ limit.  As xi -> 0 the integrand develops
    a peak of height ~ xi^(-1/2) and width ~ xi^(1/2) at eps -> 0 (the
    superfluid spectral weight), which the pointwise xi = 0 integrand
    loses; its limit contribution is analytic,
    pi*Delta*tanh(Delta/(2 kB T))/(hbar*gamma), and is added to the
    regular xi = 0 integral.

    Raises
    ------
    NumericsError
        If the quadrature does not converge within its budget; the error
        carries the best estimate and bound.
    """
    if hbar_xi_eV < 0:
        raise MaterialError("xi must be non-negative")
    if T_K >= params.tc_K:
        return 0.0
    delta = bcs_gap(GapProfile(params.tc_K), T_K)
    gamma = params.drude.gamma_eV
    kT = _KB * T_K
    if hbar_xi_eV == 0.0:
        peak = math.pi * delta * math.tanh(delta / (2.0 * kT)) / gamma
        return peak + _g_quadrature(0.0, delta, gamma, kT, tol)
    return _g_quadrature(hbar_xi_eV, delta, gamma, kT, tol)


@dataclass
class GTable:
    """Interpolable cache of g over [0, xi_max] at fixed (material, T).

    Shape-preserving (monotone piecewise-cubic) interpolation in log(xi);
    evaluation beyond xi_max returns 0 with ``tail_bound`` recording the
    neglected magnitude.  A completed table is immutable in practice and
    safe to share between threads.
    """

    xi_min_eV: float
    xi_max_eV: float
    g0: float
    tol: float
    identically_zero: bool
    tail_bound: float
    grid_xi: np.ndarray = field(repr=False)
    grid_g: np.ndarray = field(repr=False)
    _interp: PchipInterpolator | None = field(repr=False, default=None)

    def eval(self, hbar_xi_eV: np.ndarray) -> np.ndarray:
        """Vectorized g lookup; xi = 0 returns the exact g(0) value."""
        xi = np.asarray(hbar_xi_eV, dtype=float)
        out = np.zeros(xi.shape)
        if self.identically_zero:
            return out
        if np.any((xi > 0) & (xi < self.xi_min_eV * (1.0 - 1e-12))):
            raise MaterialError(
                f"g table queried below its xi_min={self.xi_min_eV:g} eV"
            )
        inside = (xi >= self.xi_min_eV * (1.0 - 1e-12)) & (xi <= self.xi_max_eV)
        if inside.any():
            out[inside] = self._interp(np.log(np.clip(xi[inside], self.xi_min_eV, None)))
        out[xi == 0.0] = self.g0
        return out


def _build_interp(xi: np.ndarray, g: np.ndarray) -> PchipInterpolator:
    return PchipInterpolator(np.log(xi), g, extrapolate=False)


def g_table(params: BcsParams, T_K: float, xi_max_eV: float, tol: float = 1e-8,
            xi_min_eV: float | None = None) -> GTable:
    """Build an interpolable g table on a log grid over [xi_min, xi_max].

    The grid is refined until the interpolation error, checked at grid
    midpoints against direct :func:`g_function` evaluation, falls below
    ``tol``; xi_max is extended automatically until g(xi_max) < tol so the
    beyond-range value 0 carries a recorded tail bound.
    """
    if tol <= 0:
        raise MaterialError("tol must be positive")
    if T_K >= params.tc_K:
        return GTable(
            xi_min_eV=0.0, xi_max_eV=math.inf, g0=0.0, tol=tol,
            identically_zero=True, tail_bound=0.0,
            grid_xi=np.empty(0), grid_g=np.empty(0),
        )
    delta0 = bcs_gap(GapProfile(params.tc_K), T_K)
    if xi_min_eV is None:
        xi_min_eV = 2e-4 * delta0
    if xi_min_eV <= 0:
        raise MaterialError("xi_min must be positive")
    gtol = min(1e-10, tol / 20.0)
    g_of = lambda x: g_function(x, T_K, params, tol=gtol)

    xi_max = max(xi_max_eV, 10.0 * delta0, 2.0 * xi_min_eV)
    for _ in range(14):
        if g_of(xi_max) < tol:
            break
        xi_max *= 4.0
    else:
        raise NumericsError(
            f"g tail does not reach {tol:g} by xi={xi_max:g} eV",
            best_value=g_of(xi_max), error_bound=tol,
        )

    # Pad half a decade past both requested edges: PCHIP's one-sided
    # endpoint derivatives are low-order, so the queried domain must not
    # touch the boundary intervals.
    decades = math.log10(2.0 * xi_max / (0.5 * xi_min_eV))
    n0 = max(32, int(40 * decades))
    xi = np.geomspace(0.5 * xi_min_eV, 2.0 * xi_max, n0)
    g = np.array([g_of(x) for x in xi])
    for _ in range(8):
        interp = _build_interp(xi, g)
        mids = np.sqrt(xi[:-1] * xi[1:])
        gm = np.array([g_of(x) for x in mids])
        err = np.abs(interp(np.log(mids)) - gm)
        if err.max() <= 0.5 * tol:
            break
        # every midpoint is already evaluated for the error check, so a
        # full doubling is free and avoids the creeping error cascade that
        # local insertion causes through PCHIP's slope coupling
        xi = np.concatenate([xi, mids])
        g = np.concatenate([g, gm])
        order = np.argsort(xi)
        xi, g = xi[order], g[order]
    else:
        raise NumericsError(
            "g table refinement failed to meet its interpolation tolerance",
            best_value=float(err.max()), error_bound=tol,
        )
    # g is monotone decreasing except for the genuine shallow rise of the
    # xi*ln(Delta/xi) term below xi ~ Delta (up to ~7% of g near Tc);
    # anything beyond that slack indicates a quadrature defect.
    if np.any(np.diff(g) > 0.1 * g.max() + 100.0 * tol):
        raise NumericsError(
            "g table grid rises beyond the physical xi*ln(xi) allowance",
            best_value=float(np.diff(g).max()), error_bound=0.0,
        )
    tail = g_of(xi_max)
    return GTable(
        xi_min_eV=xi_min_eV, xi_max_eV=xi_max, g0=g_of(0.0), tol=tol,
        identically_zero=False, tail_bound=tail,
        grid_xi=xi, grid_g=g, _interp=_build_interp(xi, g),
    )


def _drude_eps(p: DrudeParams, xi: np.ndarray) -> np.ndarray:
    return p.eps0 + p.omega_p_eV**2 / (xi * (xi + p.gamma_eV))


def permittivity(model: MaterialModel, hbar_xi_eV, T_K: float):
    """Permittivity eps(i*xi) at photon energy hbar*xi > 0; real and >= 1.

    The xi = 0 point is singular for the metal models and is classified
    separately by :func:`zero_frequency_behavior`.  Scalar input returns a
    float; array input returns an ndarray (the BCS model evaluates g per
    point by direct quadrature, which is the ground-truth path).
    """
    xi = np.asarray(hbar_xi_eV, dtype=float)
    scalar = xi.ndim == 0
    xi = np.atleast_1d(xi)
    if np.any(xi <= 0):
        raise MaterialError("permittivity requires xi > 0")
    if T_K < 0:
        raise MaterialError("temperature must be non-negative")
    if isinstance(model, Vacuum):
        out = np.ones_like(xi)
    elif isinstance(model, ConstantDielectric):
        out = np.full_like(xi, model.eps)
    elif isinstance(model, Drude):
        out = _drude_eps(model.params, xi)
    elif isinstance(model, Bcs):
        p = model.params
        out = _drude_eps(p.drude, xi)
        if T_K < p.tc_K:
            g = np.array([g_function(x, T_K, p) for x in xi])
            out = out + p.drude.omega_p_eV**2 * g / (xi * xi)
    elif isinstance(model, TwoFluid):
        p = model.params
        ns = superfluid_fraction(p.tc_K, T_K)
        d = p.drude
        out = (
            d.eps0
            + (1.0 - ns) * d.omega_p_eV**2 / (xi * (xi + d.gamma_eV))
            + ns * d.omega_p_eV**2 / (xi * xi)
        )
    elif isinstance(model, PerfectConductor):
        raise MaterialError(
            "perfect conductor has no finite permittivity; its reflection "
            "is handled analytically"
        )
    else:
        raise MaterialError(f"unknown material model {model!r}")
    return float(out[0]) if scalar else out


def zero_frequency_behavior(model: MaterialModel, T_K: float):
    """Classify the xi -> 0 limit of eps*xi^2/c^2 for the l=0 term."""
    if isinstance(model, Vacuum):
        return Dielectric(1.0)
    if isinstance(model, ConstantDielectric):
        return Dielectric(model.eps)
    if isinstance(model, PerfectConductor):
        return PlasmaLike(math.inf)
    if isinstance(model, Drude):
        return TEVanishing()
    if isinstance(model, Bcs):
        p = model.params
        if T_K >= p.tc_K:
            return TEVanishing()
        g0 = g_function(0.0, T_K, p)
        return PlasmaLike(p.drude.omega_p_eV * math.sqrt(g0))
    if isinstance(model, TwoFluid):
        p = model.params
        ns = superfluid_fraction(p.tc_K, T_K)
        if ns == 0.0:
            return TEVanishing()
        return PlasmaLike(p.drude.omega_p_eV * math.sqrt(ns))
    raise MaterialError(f"unknown material model {model!r}")


def dirty_limit_ratio(params: BcsParams) -> float:
    """Mean free path over coherence length, l/xi0 = pi*Delta(0)/(hbar*gamma0).

    The Fermi velocity cancels between l = v_F/gamma and
    xi0 = hbar*v_F/(pi*Delta(0)).  Uses the room-temperature gamma0, which
    reproduces the published diagnostic values; results >= DIRTY_LIMIT_WARN
    indicate the local (dirty-limit) response model is questionable.
    """
    delta0 = bcs_gap(GapProfile(params.tc_K), 0.0)
    return math.pi * delta0 / params.drude.gamma0_eV


def normal_state(model: MaterialModel) -> MaterialModel:
    """Replace superconducting models by their embedded Drude model."""
    if isinstance(model, (Bcs, TwoFluid)):
        return Drude(model.params.drude)
    return model


class FrequencyResponse:
    """Permittivity evaluator at fixed temperature with g-table caching.

    Built once per (material, T) and reused across all Matsubara
    frequencies of a pressure computation.  The first ``eps`` call of a
    BCS material builds the g table starting at the smallest queried
    frequency; subsequent calls must not go below it (the Lifshitz engine
    queries frequencies in ascending order).
    """

    def __init__(self, model: MaterialModel, T_K: float, table_tol: float = 1e-8):
        self.model = model
        self.T_K = T_K
        self.table_tol = table_tol
        self._table: GTable | None = None

    def eps(self, hbar_xi_eV: np.ndarray) -> np.ndarray:
        xi = np.asarray(hbar_xi_eV, dtype=float)
        m = self.model
        if isinstance(m, Bcs):
            p = m.params
            out = _drude_eps(p.drude, xi)
            if self.T_K < p.tc_K:
                if self._table is None:
                    self._table = g_table(
                        p, self.T_K, xi_max_eV=10.0 * float(np.max(xi)),
                        tol=self.table_tol, xi_min_eV=float(np.min(xi)),
                    )
                out = out + p.drude.omega_p_eV**2 * self._table.eval(xi) / (xi * xi)
            return out
        return np.asarray(permittivity(m, xi, self.T_K), dtype=float)

    @property
    def zero_frequency(self):
        if not hasattr(self, "_zf"):
            self._zf = zero_frequency_behavior(self.model, self.T_K)
        return self._zf

    @property
    def g_tail_bound(self) -> float:
        return self._table.tail_bound if self._table is not None else 0.0
