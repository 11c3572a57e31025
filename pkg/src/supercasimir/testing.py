"""Independent brute-force oracles for the validation suite.

These deliberately avoid the production engine's code paths: the pressure
oracle sums fixed-grid trapezoid integrals over the public scalar
reflection API (direct permittivity evaluation, no g-table caching, no
adaptive quadrature), and the g oracle is a fixed-grid trapezoid of the
quasiparticle integrand written out in plain energy variables.
"""

from __future__ import annotations

import math

import numpy as np

from .constants import CONSTANTS
from .lifshitz import CavityConfig, Film, HalfSpace, Mirror, mirror_reflection
from .materials import (
    BcsParams,
    Dielectric,
    GapProfile,
    PlasmaLike,
    TEVanishing,
    bcs_gap,
    zero_frequency_behavior,
)

_KB = CONSTANTS.kB_eV_per_K
_HBARC = CONSTANTS.hbar_c_eV_nm


def g_trapezoid_oracle(hbar_xi_eV: float, T_K: float, params: BcsParams,
                       n_low: int = 2_000_000, n_high: int = 2_000_000) -> float:
    """Fixed-grid trapezoid of the quasiparticle integral (doubled).

    Linear grid on eps in [0, 50*Delta] plus a log grid out to
    2000*(Delta + hbar*xi + gamma + kB*T) for the slow tail.  At xi = 0
    the superfluid peak escapes the pointwise integrand and its analytic
    limit pi*Delta*tanh(Delta/2kT)/gamma is added.
    """
    if T_K >= params.tc_K:
        return 0.0
    delta = bcs_gap(GapProfile(params.tc_K), T_K)
    gam = params.drude.gamma_eV
    kT = _KB * T_K
    x = np.longdouble(hbar_xi_eV)

    def f(eps: np.ndarray) -> np.ndarray:
        E = np.sqrt(eps * eps + delta * delta)
        Q = np.sqrt((eps * eps - x * x) + 2j * (E * x))
        A = (E * E + delta * delta) + 1j * (E * x)
        Qg = Q + 1j * gam
        D2 = (x * x + gam * gam) - 2j * (E * x) - 2j * (gam * Q)
        G = (eps * eps * Q + Qg * A) / (Q * D2)
        return (np.tanh(E / (2.0 * kT)) * G.real / E).astype(float)

    lo = np.linspace(1e-290, 50.0 * delta, n_low).astype(np.longdouble)
    flo = f(lo)
    if hbar_xi_eV == 0.0:
        # eps -> 0 limit of Re[G+] at xi = 0 is -2*Delta^2/gamma^2
        flo[0] = math.tanh(delta / (2.0 * kT)) * (-2.0 * delta / gam**2)
    total = float(np.trapezoid(flo, lo.astype(float)))
    hi_max = 2000.0 * (delta + float(x) + gam + kT)
    hi = np.exp(np.linspace(math.log(50.0 * delta), math.log(hi_max), n_high))
    total += float(np.trapezoid(f(hi.astype(np.longdouble)) * hi, np.log(hi)))
    total *= 2.0
    if hbar_xi_eV == 0.0:
        total += math.pi * delta * math.tanh(delta / (2.0 * kT)) / gam
    return total


def _zero_reflections(mirror: Mirror, kp: np.ndarray, T_K: float):
    """xi = 0 reflection coefficients rebuilt from the classifications."""

    def kappa(cls):
        if isinstance(cls, PlasmaLike):
            return math.inf if math.isinf(cls.omega_eff_eV) else cls.omega_eff_eV / _HBARC
        return 0.0

    def r_te(kp, ki, kj):
        if math.isinf(kj):
            return -np.ones_like(kp)
        a = np.hypot(kp, ki)
        b = np.hypot(kp, kj)
        return (a - b) / (a + b)

    if isinstance(mirror, HalfSpace):
        cls = zero_frequency_behavior(mirror.material, T_K)
        te = r_te(kp, 0.0, kappa(cls))
        if isinstance(cls, Dielectric):
            tm = np.full_like(kp, (cls.eps - 1.0) / (cls.eps + 1.0))
        else:
            tm = np.ones_like(kp)
        return te, tm
    cf = zero_frequency_behavior(mirror.film, T_K)
    cs = zero_frequency_behavior(mirror.substrate, T_K)
    kf, ks = kappa(cf), kappa(cs)
    r01 = r_te(kp, 0.0, kf)
    r12 = r_te(kp, kf, ks)
    e2 = np.exp(-2.0 * mirror.thickness_nm * np.hypot(kp, kf))
    te = (r01 + r12 * e2) / (1.0 + r01 * r12 * e2)
    if isinstance(cf, Dielectric):
        ra = (cf.eps - 1.0) / (cf.eps + 1.0)
        rb = 1.0 if not isinstance(cs, Dielectric) else (cs.eps - cf.eps) / (cs.eps + cf.eps)
        e2 = np.exp(-2.0 * mirror.thickness_nm * kp)
        tm = (ra + rb * e2) / (1.0 + ra * rb * e2)
    else:
        tm = np.ones_like(kp)
    return te, tm


def brute_force_pressure(cavity: CavityConfig, n_y: int = 100_000,
                         y_span: float = 60.0, y_stop: float = 40.0) -> float:
    """Fixed-grid reference pressure (Pa): trapezoid in y, plain term loop.

    Every Matsubara term up to y_l = y_stop is integrated on an n_y-point
    linear y-grid through the public scalar reflection API.
    """
    a = cavity.gap_nm
    T = cavity.temperature_K
    kT = _KB * T
    xi1 = 2.0 * math.pi * kT
    dy = 2.0 * a / _HBARC * xi1
    l_max = int(math.ceil(y_stop / dy))
    terms = []
    # l = 0 with the analytic zero-frequency reflections, half weight
    y = np.linspace(1e-9, y_span, n_y)
    kp = y / (2.0 * a)
    te1, tm1 = _zero_reflections(cavity.mirror1, kp, T)
    te2, tm2 = _zero_reflections(cavity.mirror2, kp, T)
    emy = np.exp(-y)
    be = te1 * te2 * emy
    bm = tm1 * tm2 * emy
    terms.append(0.5 * float(np.trapezoid(y * y * (be / (1 - be) + bm / (1 - bm)), y)))
    for l in range(1, l_max + 1):
        xi = xi1 * l
        y0 = dy * l
        y = np.linspace(y0, y0 + y_span, n_y)
        q = y / (2.0 * a)
        kp = np.sqrt(np.maximum(q * q - (xi / _HBARC) ** 2, 0.0))
        prod_te = np.ones_like(y)
        prod_tm = np.ones_like(y)
        for m in (cavity.mirror1, cavity.mirror2):
            prod_te = prod_te * mirror_reflection(m, xi, kp, "TE", T)
            prod_tm = prod_tm * mirror_reflection(m, xi, kp, "TM", T)
        emy = np.exp(-y)
        be = prod_te * emy
        bm = prod_tm * emy
        terms.append(float(np.trapezoid(y * y * (be / (1 - be) + bm / (1 - bm)), y)))
    prefactor = kT / (8.0 * math.pi * a**3) * CONSTANTS.pa_per_eV_nm3
    return -prefactor * math.fsum(terms)
