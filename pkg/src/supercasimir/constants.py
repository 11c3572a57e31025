"""Physical constants and unit conversions.

All internal computations use eV for energies (frequencies are stored as
``hbar*xi`` in eV), nm for lengths, K for temperatures and Pa for pressures.
Every unit conversion in the package routes through the single
:data:`CONSTANTS` record below.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA-2018 constants in the package's working units.

    The 2019 SI redefinition fixes h, e, k_B and c exactly, so the derived
    values below are exact to double precision.
    """

    hbar_eV_s: float = 6.582119569509066e-16
    kB_eV_per_K: float = 8.617333262145177e-05
    hbar_c_eV_nm: float = 197.32698045930246
    c_nm_per_s: float = 2.99792458e17

    @property
    def pa_per_eV_nm3(self) -> float:
        """Pressure conversion: 1 eV/nm^3 = e/1e-27 Pa (e exact)."""
        return 1.602176634e8

    def rad_per_s_to_eV(self, xi_rad_s: float) -> float:
        """Angular frequency (rad/s) to photon energy hbar*xi (eV)."""
        return xi_rad_s * self.hbar_eV_s

    def eV_to_rad_per_s(self, hbar_xi_eV: float) -> float:
        """Photon energy hbar*xi (eV) to angular frequency (rad/s)."""
        return hbar_xi_eV / self.hbar_eV_s


CONSTANTS = PhysicalConstants()
