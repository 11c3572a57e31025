"""Declarative parameter sweeps, builtin figure scenarios, and CSV output.

Sweeps are described by :class:`SweepSpec` (axis, points, mode, variants)
over a :class:`CavityConfig` template; ``run_sweep`` evaluates one
delta-pressure or pressure per point and returns a :class:`SweepTable`
that serializes to the package's CSV contract.  Builtin scenarios
parameterize the paper-style figures fig1..fig10 plus the two-fluid
comparison table.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

import numpy as np

from . import __version__
from .constants import CONSTANTS
from .lifshitz import (
    CavityConfig,
    DeltaPressureResult,
    Film,
    HalfSpace,
    Mirror,
    PressureSettings,
    delta_pressure,
    pressure,
)
from .materials import (
    Bcs,
    BcsParams,
    ConstantDielectric,
    Drude,
    DrudeParams,
    GapProfile,
    MaterialModel,
    PerfectConductor,
    TwoFluid,
    Vacuum,
    bcs_gap,
    g_function,
    permittivity,
)

__all__ = [
    "AXES",
    "MODES",
    "SweepSpec",
    "SweepTable",
    "Variant",
    "ResponseCurveSpec",
    "MaterialCatalog",
    "ScenarioError",
    "load_materials",
    "default_materials",
    "load_scenario",
    "run_sweep",
    "run_response",
    "builtin_scenario",
    "BUILTIN_SCENARIOS",
]

AXES = ("temperature", "separation", "film_thickness", "rrr_sc", "rrr_au", "core_eps")
MODES = ("as_modeled", "force_normal_state", "both")
OUTPUTS = ("pressure", "delta_pressure")


class ScenarioError(ValueError):
    """Invalid sweep specification, scenario name, or config file."""


@dataclass(frozen=True)
class Variant:
    """Named template patch evaluated as a separate curve of the sweep."""

    label: str = ""
    field: str = "none"
    value: float | str | None = None


@dataclass(frozen=True)
class SweepSpec:
    name: str
    base: CavityConfig
    axis: str
    points: tuple[float, ...]
    mode: str = "as_modeled"
    output: str = "delta_pressure"
    variants: tuple[Variant, ...] = (Variant(),)
    t_ref_K: float | None = None

    def __post_init__(self):
        if self.axis not in AXES:
            raise ScenarioError(f"unknown axis {self.axis!r}; valid: {AXES}")
        if self.mode not in MODES:
            raise ScenarioError(f"unknown mode {self.mode!r}; valid: {MODES}")
        if self.output not in OUTPUTS:
            raise ScenarioError(f"unknown output {self.output!r}; valid: {OUTPUTS}")
        if not self.points:
            raise ScenarioError("sweep needs at least one point")
        diffs = np.diff(self.points)
        if len(diffs) and not (np.all(diffs > 0) or np.all(diffs < 0)):
            raise ScenarioError("sweep points must be strictly monotone")
        for p in self.points:
            self._check_range(self.axis, float(p))

    def _check_range(self, axis: str, v: float):
        if axis == "temperature":
            ref = self.t_ref_K
            if v <= 0 or (ref is not None and v > ref * (1 + 1e-12)):
                raise ScenarioError(f"temperature {v} outside (0, T_ref]")
        elif axis == "separation" and v < 10.0:
            raise ScenarioError(f"separation {v} nm below the 10 nm floor")
        elif axis == "film_thickness" and v <= 0.0:
            raise ScenarioError("film thickness must be positive")
        elif axis in ("rrr_sc", "rrr_au") and v < 0.1:
            raise ScenarioError(f"RRR {v} below the 0.1 floor")
        elif axis == "core_eps" and v < 1.0:
            raise ScenarioError("core eps must be >= 1")


@dataclass
class SweepTable:
    """Tabular sweep result and its CSV serialization."""

    name: str
    meta: dict[str, str]
    columns: list[str]
    rows: np.ndarray
    row_errors: list[str | None] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = [f"# supercasimir v{__version__} scenario={self.name}"]
        lines.append("# " + " ".join(f"{k}={v}" for k, v in self.meta.items()))
        lines.append(",".join(self.columns))
        for row in self.rows:
            lines.append(",".join(f"{v:.16e}" for v in row))
        return "\n".join(lines) + "\n"

    def column(self, name: str) -> np.ndarray:
        return self.rows[:, self.columns.index(name)]


# --- material models handled by the sweep patch machinery -----------------


def _patch_model(model: MaterialModel, field_name: str, value) -> MaterialModel:
    if field_name == "rrr_sc" and isinstance(model, (Bcs, TwoFluid)):
        d = replace(model.params.drude, rrr=float(value))
        return type(model)(replace(model.params, drude=d))
    if field_name == "rrr_au" and isinstance(model, Drude):
        return Drude(replace(model.params, rrr=float(value)))
    if field_name == "core_eps" and isinstance(model, (Bcs, TwoFluid)):
        d = replace(model.params.drude, eps0=float(value))
        return type(model)(replace(model.params, drude=d))
    if field_name == "model_bcs" and isinstance(model, TwoFluid):
        return Bcs(model.params)
    return model


def _patch_mirror(mirror: Mirror, field_name: str, value) -> Mirror:
    if field_name == "film_thickness" and isinstance(mirror, Film):
        return replace(mirror, thickness_nm=float(value))
    if field_name == "substrate" and isinstance(mirror, Film):
        return replace(mirror, substrate=value)
    if field_name in ("rrr_sc", "rrr_au", "core_eps", "model_bcs"):
        if isinstance(mirror, HalfSpace):
            return HalfSpace(_patch_model(mirror.material, field_name, value))
        return Film(
            _patch_model(mirror.film, field_name, value),
            mirror.thickness_nm,
            _patch_model(mirror.substrate, field_name, value),
        )
    return mirror


def apply_patch(cavity: CavityConfig, field_name: str, value) -> CavityConfig:
    """Apply one axis/variant patch to the cavity template."""
    if field_name == "none":
        return cavity
    if field_name == "temperature":
        return replace(cavity, temperature_K=float(value))
    if field_name == "separation":
        return replace(cavity, gap_nm=float(value))
    return replace(
        cavity,
        mirror1=_patch_mirror(cavity.mirror1, field_name, value),
        mirror2=_patch_mirror(cavity.mirror2, field_name, value),
    )


def run_sweep(spec: SweepSpec, settings: PressureSettings | None = None) -> SweepTable:
    """Evaluate the sweep; rows in axis order, deterministic.

    Per-point failures are recorded as NaN rows with the error message in
    ``row_errors``; a sweep in which every point failed raises.
    """
    settings = settings or PressureSettings()
    axis_col = {
        "temperature": "T_K", "separation": "a_nm", "film_thickness": "w_nm",
        "rrr_sc": "rrr_sc", "rrr_au": "rrr_au", "core_eps": "eps0",
    }[spec.axis]
    delta_out = spec.output == "delta_pressure"
    unit = "mPa" if delta_out else "Pa"
    scale = 1e3 if delta_out else 1.0
    columns = [axis_col]
    for var in spec.variants:
        tag = f"__{var.label}" if var.label else ""
        base_name = "deltaP" if delta_out else "pressure"
        if spec.mode in ("as_modeled", "both") or not delta_out:
            columns += [f"{base_name}_{unit}{tag}", f"err_{unit}{tag}"]
        if delta_out and spec.mode == "force_normal_state":
            columns += [f"deltaP_normal_{unit}{tag}", f"err_normal_{unit}{tag}"]
    if delta_out and spec.mode == "both":
        columns += [f"deltaP_normal_{unit}", f"err_normal_{unit}"]

    ref_cache: dict = {}
    rows = []
    row_errors: list[str | None] = []
    n_failed = 0
    for p in spec.points:
        row = [float(p)]
        err_msg = None
        try:
            for var in spec.variants:
                cav = apply_patch(spec.base, spec.axis, p)
                cav = apply_patch(cav, var.field, var.value)
                if delta_out:
                    T = cav.temperature_K
                    mode = "force_normal_state" if spec.mode == "force_normal_state" else "as_modeled"
                    d = delta_pressure(cav, T, spec.t_ref_K, mode, settings,
                                       _ref_cache=ref_cache)
                    row += [d.delta_Pa * scale, d.combined_error_Pa * scale]
                else:
                    res = pressure(cav, settings)
                    row += [res.pressure_Pa, res.total_error_Pa]
            if delta_out and spec.mode == "both":
                cav = apply_patch(spec.base, spec.axis, p)
                cav = apply_patch(cav, spec.variants[0].field, spec.variants[0].value)
                d = delta_pressure(cav, cav.temperature_K, spec.t_ref_K,
                                   "force_normal_state", settings, _ref_cache=ref_cache)
                row += [d.delta_Pa * scale, d.combined_error_Pa * scale]
        except Exception as exc:  # per-point failure: keep sweeping
            row = [float(p)] + [math.nan] * (len(columns) - 1)
            err_msg = f"{type(exc).__name__}: {exc}"
            n_failed += 1
        rows.append(row)
        row_errors.append(err_msg)
    if n_failed == len(spec.points):
        raise ScenarioError(
            f"sweep {spec.name!r} failed at every point; first error: {row_errors[0]}"
        )
    meta = _sweep_meta(spec, settings)
    return SweepTable(spec.name, meta, columns, np.array(rows), row_errors)


def _model_tag(m: MaterialModel) -> str:
    if isinstance(m, Drude):
        p = m.params
        return f"drude(eps0={p.eps0:g},Omega={p.omega_p_eV:g}eV,gamma0={p.gamma0_eV:g}eV,rrr={p.rrr:g})"
    if isinstance(m, (Bcs, TwoFluid)):
        kind = "bcs" if isinstance(m, Bcs) else "twofluid"
        p = m.params
        d = p.drude
        return (f"{kind}(eps0={d.eps0:g},Omega={d.omega_p_eV:g}eV,"
                f"gamma0={d.gamma0_eV:g}eV,rrr={d.rrr:g},Tc={p.tc_K:g}K)")
    if isinstance(m, ConstantDielectric):
        return f"dielectric(eps={m.eps:g})"
    if isinstance(m, PerfectConductor):
        return "perfect"
    return "vacuum"


def _mirror_tag(m: Mirror) -> str:
    if isinstance(m, HalfSpace):
        return _model_tag(m.material)
    return f"film[{_model_tag(m.film)};w={m.thickness_nm:g}nm;sub={_model_tag(m.substrate)}]"


def _sweep_meta(spec: SweepSpec, settings: PressureSettings) -> dict[str, str]:
    b = spec.base
    meta = {
        "mirror1": _mirror_tag(b.mirror1),
        "mirror2": _mirror_tag(b.mirror2),
        "a_nm": f"{b.gap_nm:g}",
        "T_K": f"{b.temperature_K:g}",
        "axis": spec.axis,
        "mode": spec.mode,
        "output": spec.output,
        "tol_abs_Pa": f"{settings.tol_abs_Pa:g}",
    }
    if spec.t_ref_K is not None:
        meta["T_ref_K"] = f"{spec.t_ref_K:g}"
    if spec.variants != (Variant(),):
        meta["variants"] = ";".join(
            f"{v.label}:{v.field}={v.value}" for v in spec.variants
        )
    return meta


# --- response curves (fig1/fig2) -------------------------------------------


@dataclass(frozen=True)
class ResponseCurveSpec:
    """g(xi) or eps(i xi) curves on a log grid of xi/(2 Delta(0))."""

    name: str
    kind: str  # 'g' or 'permittivity'
    params: BcsParams
    temps_over_tc: tuple[float, ...]
    xi_over_2delta0: tuple[float, ...]
    g_tol: float = 1e-10


def run_response(spec: ResponseCurveSpec) -> SweepTable:
    delta0 = bcs_gap(GapProfile(spec.params.tc_K), 0.0)
    x = np.asarray(spec.xi_over_2delta0, dtype=float)
    xi = 2.0 * delta0 * x
    columns = ["xi_over_2delta0"]
    cols = [x]
    if spec.kind == "g":
        for t in spec.temps_over_tc:
            T = t * spec.params.tc_K
            columns.append(f"g__T{_tlabel(t)}")
            cols.append(np.array([g_function(v, T, spec.params, tol=spec.g_tol) for v in xi]))
        columns.append("g_err")
        cols.append(np.full_like(x, spec.g_tol))
    elif spec.kind == "permittivity":
        for t in spec.temps_over_tc:
            T = t * spec.params.tc_K
            columns.append(f"eps_bcs__T{_tlabel(t)}")
            cols.append(np.asarray(permittivity(Bcs(spec.params), xi, T), dtype=float))
        columns.append("eps_drude")
        cols.append(np.asarray(permittivity(Drude(spec.params.drude), xi, 0.0), dtype=float))
        for t in spec.temps_over_tc:
            T = t * spec.params.tc_K
            columns.append(f"eps_twofluid__T{_tlabel(t)}")
            cols.append(np.asarray(permittivity(TwoFluid(spec.params), xi, T), dtype=float))
        columns.append("eps_err")
        # eps error budget: Omega^2 * g_tol / xi^2 from the g quadrature
        cols.append(spec.params.drude.omega_p_eV**2 * spec.g_tol / (xi * xi))
    else:
        raise ScenarioError(f"unknown response kind {spec.kind!r}")
    meta = {
        "material": _model_tag(Bcs(spec.params)),
        "temps_over_tc": ";".join(f"{t:g}" for t in spec.temps_over_tc),
        "delta0_eV": f"{delta0:.12e}",
    }
    return SweepTable(spec.name, meta, columns, np.column_stack(cols))


def _tlabel(t: float) -> str:
    return f"{t:g}".replace(".", "p")


# --- material database ------------------------------------------------------

_DB_FIELDS = {"model", "eps0", "omega_p_eV", "gamma0_eV", "rrr", "tc_K", "eps"}
_MODEL_NAMES = ("drude", "bcs", "twofluid", "dielectric", "perfect")


@dataclass(frozen=True)
class MaterialRecord:
    name: str
    kind: str
    model: MaterialModel


class MaterialCatalog:
    """Validated material records addressable by name (case-sensitive).

    The names 'vacuum' and 'perfect' always resolve (built-in models)
    unless shadowed by a database record.
    """

    def __init__(self, records: list[MaterialRecord], source: str):
        self.source = source
        self._by_name = {r.name: r for r in records}

    def names(self) -> list[str]:
        return list(self._by_name)

    def records(self) -> list[MaterialRecord]:
        return list(self._by_name.values())

    def get(self, name: str) -> MaterialModel:
        if name in self._by_name:
            return self._by_name[name].model
        if name == "vacuum":
            return Vacuum()
        if name == "perfect":
            return PerfectConductor()
        raise ScenarioError(
            f"unknown material {name!r}; catalog has {sorted(self._by_name)}"
        )


def _section_line(path: str | Path, section: str) -> int:
    try:
        for i, line in enumerate(Path(path).read_text().splitlines(), start=1):
            if line.strip() == f"[{section}]":
                return i
    except OSError:
        pass
    return 0


def load_materials(path: str | Path) -> MaterialCatalog:
    """Parse a material database (INI, one section per material)."""
    cp = configparser.ConfigParser(interpolation=None)
    cp.optionxform = str  # field names are case-sensitive (omega_p_eV, tc_K)
    try:
        with open(path, "r") as fh:
            cp.read_file(fh, source=str(path))
    except FileNotFoundError:
        raise ScenarioError(f"material database {path} does not exist")
    except configparser.DuplicateSectionError as exc:
        raise ScenarioError(
            f"{path}:{exc.lineno}: duplicate material {exc.section!r}"
        ) from exc
    except configparser.Error as exc:
        raise ScenarioError(f"{path}: {exc}") from exc
    records = []
    for name in cp.sections():
        sec = cp[name]
        line = _section_line(path, name)
        where = f"{path}:{line} [{name}]"
        unknown = set(sec) - _DB_FIELDS
        if unknown:
            raise ScenarioError(f"{where}: unknown keys {sorted(unknown)}")
        kind = sec.get("model", "")
        if kind not in _MODEL_NAMES:
            raise ScenarioError(
                f"{where}: model must be one of {_MODEL_NAMES}, got {kind!r}"
            )
        try:
            records.append(MaterialRecord(name, kind, _build_model(kind, sec, where)))
        except (ValueError, KeyError) as exc:
            raise ScenarioError(f"{where}: {exc}") from exc
    if not records:
        raise ScenarioError(f"{path}: no materials")
    return MaterialCatalog(records, str(path))


def _require(sec, where: str, *keys: str) -> list[float]:
    vals = []
    for k in keys:
        if k not in sec:
            raise ScenarioError(f"{where}: missing required key {k!r}")
        vals.append(float(sec[k]))
    return vals


def _build_model(kind: str, sec, where: str) -> MaterialModel:
    if kind == "perfect":
        return PerfectConductor()
    if kind == "dielectric":
        (eps,) = _require(sec, where, "eps")
        return ConstantDielectric(eps)
    eps0, omega, gamma0 = _require(sec, where, "eps0", "omega_p_eV", "gamma0_eV")
    rrr = float(sec.get("rrr", 1.0))
    drude = DrudeParams(eps0, omega, gamma0, rrr)
    if kind == "drude":
        return Drude(drude)
    (tc,) = _require(sec, where, "tc_K")
    params = BcsParams(drude, tc)
    return Bcs(params) if kind == "bcs" else TwoFluid(params)


def default_materials() -> MaterialCatalog:
    """Catalog shipped with the package (Au, Al, NbTiN, SiN, perfect)."""
    with resources.as_file(
        resources.files("supercasimir").joinpath("data/materials.ini")
    ) as p:
        return load_materials(p)


# --- scenario config files --------------------------------------------------


def load_scenario(path: str | Path, catalog: MaterialCatalog | None = None) -> SweepSpec:
    """Parse a sweep config (INI with [cavity], [mirror1], [mirror2], [sweep])."""
    catalog = catalog or default_materials()
    cp = configparser.ConfigParser(interpolation=None)
    cp.optionxform = str
    try:
        with open(path, "r") as fh:
            cp.read_file(fh, source=str(path))
    except FileNotFoundError:
        raise ScenarioError(f"scenario file {path} does not exist")
    except configparser.Error as exc:
        raise ScenarioError(f"{path}: {exc}") from exc
    for section in ("cavity", "mirror1", "mirror2", "sweep"):
        if section not in cp:
            raise ScenarioError(f"{path}: missing [{section}] section")

    def mirror_from(secname: str) -> Mirror:
        sec = cp[secname]
        where = f"{path}:{_section_line(path, secname)} [{secname}]"
        unknown = set(sec) - {"material", "w_nm", "substrate"}
        if unknown:
            raise ScenarioError(f"{where}: unknown keys {sorted(unknown)}")
        if "material" not in sec:
            raise ScenarioError(f"{where}: missing 'material'")
        m = catalog.get(sec["material"])
        if "w_nm" in sec:
            sub = catalog.get(sec.get("substrate", "vacuum"))
            return Film(m, float(sec["w_nm"]), sub)
        if "substrate" in sec:
            raise ScenarioError(f"{where}: 'substrate' requires 'w_nm'")
        return HalfSpace(m)

    cav = cp["cavity"]
    unknown = set(cav) - {"a_nm", "T_K"}
    if unknown:
        raise ScenarioError(f"{path} [cavity]: unknown keys {sorted(unknown)}")
    if "a_nm" not in cav:
        raise ScenarioError(f"{path} [cavity]: missing 'a_nm'")
    sw = cp["sweep"]
    unknown = set(sw) - {"axis", "points", "from", "to", "count", "scale",
                         "mode", "output", "T_ref_K"}
    if unknown:
        raise ScenarioError(f"{path} [sweep]: unknown keys {sorted(unknown)}")
    axis = sw.get("axis", "temperature")
    if "points" in sw:
        if "from" in sw or "to" in sw:
            raise ScenarioError(f"{path} [sweep]: give either points or a range")
        points = tuple(float(t) for t in sw["points"].split())
    else:
        lo, hi = _require(sw, f"{path} [sweep]", "from", "to")
        count = int(sw.get("count", 25))
        scale = sw.get("scale", "lin")
        if scale == "lin":
            points = tuple(np.linspace(lo, hi, count).tolist())
        elif scale == "log":
            points = tuple(np.geomspace(lo, hi, count).tolist())
        else:
            raise ScenarioError(f"{path} [sweep]: scale must be lin or log")
    t_ref = float(sw["T_ref_K"]) if "T_ref_K" in sw else None
    base_T = float(cav.get("T_K", t_ref if t_ref is not None else 0.0))
    if base_T <= 0 and axis != "temperature":
        raise ScenarioError(f"{path} [cavity]: T_K required for axis {axis!r}")
    base = CavityConfig(
        mirror_from("mirror1"), mirror_from("mirror2"),
        float(cav["a_nm"]), base_T if base_T > 0 else 1.0,
    )
    return SweepSpec(
        name=Path(path).stem,
        base=base,
        axis=axis,
        points=points,
        mode=sw.get("mode", "as_modeled"),
        output=sw.get("output", "delta_pressure"),
        t_ref_K=t_ref,
    )


# --- builtin figure scenarios ----------------------------------------------

# NbTiN core-electron permittivity is unpublished; eps0 = 1 is the default
# and figs 5/6 carry the eps0 = 10 companion curve.  The two-fluid
# comparison table uses eps0 = 5, which reproduces the quoted -265 mPa
# estimate together with its 5.1% fractional pressure change.
_TWOFLUID_EPS0 = 5.0


def _std(catalog: MaterialCatalog | None) -> MaterialCatalog:
    return catalog or default_materials()


def _t_grid(tc: float, n: int = 25) -> tuple[float, ...]:
    return tuple((tc * f) for f in np.linspace(0.05, 1.0, n))


def builtin_scenario(name: str, catalog: MaterialCatalog | None = None):
    """Exact parameterization of a paper-style figure.

    fig1/fig2 return a :class:`ResponseCurveSpec`; the others return a
    :class:`SweepSpec`.  Unknown names raise with the list of valid ones.
    """
    cat = _std(catalog)
    au = HalfSpace(cat.get("Au"))
    al = HalfSpace(cat.get("Al"))
    nbtin = HalfSpace(cat.get("NbTiN"))
    sin = cat.get("SiN")
    nb_params: BcsParams = cat.get("NbTiN").params  # type: ignore[union-attr]
    al_tc = cat.get("Al").params.tc_K  # type: ignore[union-attr]
    nb_tc = nb_params.tc_K

    if name == "fig1":
        return ResponseCurveSpec(
            "fig1", "g", nb_params, (0.1, 0.9),
            tuple(np.geomspace(1e-3, 1e3, 201).tolist()),
        )
    if name == "fig2":
        return ResponseCurveSpec(
            "fig2", "permittivity", nb_params, (0.1, 0.9),
            tuple(np.geomspace(1e-3, 1e3, 201).tolist()),
        )
    if name == "fig3":
        return SweepSpec(
            "fig3", CavityConfig(al, al, 100.0, al_tc), "temperature",
            _t_grid(al_tc), mode="both", t_ref_K=al_tc,
        )
    if name == "fig4":
        film = Film(cat.get("Al"), 18.0, sin)
        return SweepSpec(
            "fig4", CavityConfig(film, film, 100.0, 0.5 * al_tc),
            "film_thickness", tuple(np.geomspace(10.0, 1000.0, 25).tolist()),
            t_ref_K=al_tc,
        )
    if name == "fig5":
        return SweepSpec(
            "fig5", CavityConfig(nbtin, nbtin, 100.0, nb_tc), "temperature",
            _t_grid(nb_tc), mode="both", t_ref_K=nb_tc,
            variants=(Variant("eps0_1", "core_eps", 1.0),
                      Variant("eps0_10", "core_eps", 10.0)),
        )
    if name == "fig6":
        return SweepSpec(
            "fig6", CavityConfig(au, nbtin, 100.0, nb_tc), "temperature",
            _t_grid(nb_tc), mode="both", t_ref_K=nb_tc,
            variants=(Variant("eps0_1", "core_eps", 1.0),
                      Variant("eps0_10", "core_eps", 10.0)),
        )
    if name == "fig7":
        return SweepSpec(
            "fig7", CavityConfig(au, nbtin, 100.0, 0.5 * nb_tc), "separation",
            tuple(np.linspace(60.0, 250.0, 25).tolist()), t_ref_K=nb_tc,
            variants=(Variant("rrr_1p12", "rrr_sc", 1.12),
                      Variant("rrr_5", "rrr_sc", 5.0)),
        )
    if name == "fig8":
        return SweepSpec(
            "fig8", CavityConfig(au, nbtin, 100.0, 0.5 * nb_tc), "rrr_sc",
            tuple(np.linspace(1.0, 10.0, 25).tolist()), t_ref_K=nb_tc,
            variants=(Variant("a_100nm", "separation", 100.0),
                      Variant("a_60nm", "separation", 60.0)),
        )
    if name == "fig9":
        return SweepSpec(
            "fig9", CavityConfig(au, nbtin, 100.0, 0.5 * nb_tc), "rrr_au",
            tuple(np.linspace(1.0, 10.0, 25).tolist()), t_ref_K=nb_tc,
            variants=(Variant("a_100nm", "separation", 100.0),
                      Variant("a_60nm", "separation", 60.0)),
        )
    if name == "fig10":
        film = Film(cat.get("NbTiN"), 200.0, Vacuum())
        return SweepSpec(
            "fig10", CavityConfig(au, film, 100.0, 0.5 * nb_tc),
            "film_thickness", tuple(np.geomspace(10.0, 1000.0, 25).tolist()),
            t_ref_K=nb_tc,
            variants=(Variant("freestanding", "none", None),
                      Variant("sub_eps10", "substrate", ConstantDielectric(10.0))),
        )
    if name == "twofluid_comparison":
        d = replace(nb_params.drude, eps0=_TWOFLUID_EPS0)
        p = replace(nb_params, drude=d)
        return SweepSpec(
            "twofluid_comparison",
            CavityConfig(au, HalfSpace(TwoFluid(p)), 100.0, 0.1 * nb_tc),
            "temperature", (0.1 * nb_tc,), t_ref_K=nb_tc,
            variants=(Variant("twofluid", "none", None),
                      Variant("bcs", "model_bcs", None)),
        )
    raise ScenarioError(
        f"unknown scenario {name!r}; valid: {sorted(BUILTIN_SCENARIOS)}"
    )


BUILTIN_SCENARIOS = (
    "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9",
    "fig10", "twofluid_comparison",
)
