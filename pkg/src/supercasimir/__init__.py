"""Finite-temperature Casimir pressure between metallic and superconducting mirrors.

Lifshitz-formula pressures and their variation across the superconducting
transition, with Drude, BCS (Mattis-Bardeen, dirty limit) and two-fluid
permittivity models.
"""

__version__ = "0.1.0"

from .constants import CONSTANTS, PhysicalConstants
from .materials import (
    Bcs,
    BcsParams,
    ConstantDielectric,
    Dielectric,
    Drude,
    DrudeParams,
    GapProfile,
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
from .lifshitz import (
    CavityConfig,
    DeltaPressureResult,
    Film,
    HalfSpace,
    PressureResult,
    PressureSettings,
    delta_pressure,
    fresnel,
    mirror_reflection,
    pressure,
)
from .numerics import (
    NumericsError,
    QuadResult,
    SumDiagnostics,
    integrate_semi_infinite,
    matsubara_sum,
)
from .scenarios import (
    BUILTIN_SCENARIOS,
    MaterialCatalog,
    ResponseCurveSpec,
    SweepSpec,
    SweepTable,
    Variant,
    builtin_scenario,
    default_materials,
    load_materials,
    load_scenario,
    run_response,
    run_sweep,
)

__all__ = [
    "__version__",
    "CONSTANTS",
    "PhysicalConstants",
    "Bcs", "BcsParams", "ConstantDielectric", "Dielectric", "Drude",
    "DrudeParams", "GapProfile", "PerfectConductor", "PlasmaLike",
    "TEVanishing", "TwoFluid", "Vacuum",
    "bcs_gap", "dirty_limit_ratio", "g_function", "g_table", "permittivity",
    "superfluid_fraction", "zero_frequency_behavior",
    "CavityConfig", "DeltaPressureResult", "Film", "HalfSpace",
    "PressureResult", "PressureSettings", "delta_pressure", "fresnel",
    "mirror_reflection", "pressure",
    "NumericsError", "QuadResult", "SumDiagnostics",
    "integrate_semi_infinite", "matsubara_sum",
    "BUILTIN_SCENARIOS", "MaterialCatalog", "ResponseCurveSpec", "SweepSpec",
    "SweepTable", "Variant", "builtin_scenario", "default_materials",
    "load_materials", "load_scenario", "run_response", "run_sweep",
]
