"""Command-line interface.

Commands: pressure, delta, sweep, response, validate, materials.
Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 validation
failure.  All errors go to stderr with an ``error:`` prefix.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__
from .lifshitz import (
    CavityConfig,
    CavityError,
    Film,
    HalfSpace,
    PressureSettings,
    delta_pressure,
    pressure,
    reference_temperature,
)
from .materials import MaterialError
from .numerics import NumericsError
from .scenarios import (
    BUILTIN_SCENARIOS,
    MaterialCatalog,
    ResponseCurveSpec,
    ScenarioError,
    SweepSpec,
    builtin_scenario,
    default_materials,
    load_materials,
    load_scenario,
    run_response,
    run_sweep,
)

USAGE_ERROR, NUMERICAL_ERROR, VALIDATION_ERROR = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _add_common(p: _Parser):
    p.add_argument("--materials-db", metavar="PATH",
                   help="material database (default: built-in, or "
                        "$SUPERCASIMIR_MATERIALS)")
    p.add_argument("--tol-abs-pa", type=float, default=None,
                   help="absolute Matsubara-tail target per pressure [Pa]")
    p.add_argument("--cutoff-ratio", type=float, default=None,
                   help="relative Matsubara term cutoff")
    p.add_argument("--g-table-tol", type=float, default=None,
                   help="g interpolation table tolerance")
    p.add_argument("--threads", type=int, default=0,
                   help="thread budget hint (results are identical at any "
                        "value; 0 = hardware default)")


def _add_cavity_flags(p: _Parser):
    p.add_argument("--material1", metavar="NAME")
    p.add_argument("--material2", metavar="NAME")
    p.add_argument("--film1-nm", type=float)
    p.add_argument("--film2-nm", type=float)
    p.add_argument("--substrate1", metavar="NAME")
    p.add_argument("--substrate2", metavar="NAME")
    p.add_argument("--a-nm", type=float)
    p.add_argument("--config", metavar="PATH",
                   help="cavity config file; inline flags win on conflict")
    p.add_argument("--sc-eps0", type=float, default=None,
                   help="override core-electron eps0 of superconductors")
    p.add_argument("--substrate-eps", type=float, default=None,
                   help="override the permittivity of dielectric substrates")


def build_parser() -> _Parser:
    p = _Parser(prog="supercasimir",
                description="Casimir pressure between superconducting mirrors")
    p.add_argument("--version", action="version", version=f"supercasimir {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    pp = sub.add_parser("pressure", parents=[], help="single Casimir pressure")
    _add_cavity_flags(pp)
    _add_common(pp)
    pp.add_argument("--T-K", type=float, dest="T_K")

    pd = sub.add_parser("delta", help="pressure variation across the transition")
    _add_cavity_flags(pd)
    _add_common(pd)
    pd.add_argument("--scenario", choices=sorted(BUILTIN_SCENARIOS),
                    help="use a builtin scenario's cavity")
    g = pd.add_mutually_exclusive_group()
    g.add_argument("--T-K", type=float, dest="T_K")
    g.add_argument("--T-over-Tc", type=float, dest="T_over_Tc")
    pd.add_argument("--T-ref-K", type=float, dest="T_ref_K")
    pd.add_argument("--mode", choices=("as_modeled", "force_normal_state"),
                    default="as_modeled")

    ps = sub.add_parser("sweep", help="run a sweep and write its CSV")
    _add_common(ps)
    src = ps.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=sorted(BUILTIN_SCENARIOS))
    src.add_argument("--config", metavar="PATH")
    ps.add_argument("--out", metavar="PATH", required=True)
    ps.add_argument("--sc-eps0", type=float, default=None)

    pr = sub.add_parser("response", help="write g(xi) or eps(i xi) curves")
    _add_common(pr)
    pr.add_argument("--builtin", choices=("fig1", "fig2"), required=True)
    pr.add_argument("--out", metavar="PATH", required=True)

    pv = sub.add_parser("validate", help="run the built-in validation suite")
    _add_common(pv)
    pv.add_argument("--only", metavar="SUBSTR",
                    help="run only checks whose name contains SUBSTR")

    pm = sub.add_parser("materials", help="list the material catalog")
    _add_common(pm)
    return p


def _catalog(args) -> MaterialCatalog:
    path = args.materials_db or os.environ.get("SUPERCASIMIR_MATERIALS")
    return load_materials(path) if path else default_materials()


def _settings(args) -> PressureSettings:
    s = PressureSettings()
    if getattr(args, "tol_abs_pa", None) is not None:
        s = replace(s, tol_abs_Pa=args.tol_abs_pa)
    if getattr(args, "cutoff_ratio", None) is not None:
        s = replace(s, cutoff_ratio=args.cutoff_ratio)
    if getattr(args, "g_table_tol", None) is not None:
        s = replace(s, g_table_tol=args.g_table_tol)
    if getattr(args, "threads", 0) and args.threads < 0:
        raise ScenarioError("--threads must be >= 1")
    return s


def _mirror_from_flags(catalog, material, film_nm, substrate):
    if material is None:
        return None
    model = catalog.get(material)
    if film_nm is not None:
        sub = catalog.get(substrate) if substrate else None
        from .materials import Vacuum
        return Film(model, film_nm, sub if sub is not None else Vacuum())
    if substrate:
        raise ScenarioError("--substrateN requires --filmN-nm")
    return HalfSpace(model)


def _apply_overrides(cavity: CavityConfig, args) -> CavityConfig:
    from .scenarios import apply_patch
    from .materials import ConstantDielectric
    if getattr(args, "sc_eps0", None) is not None:
        cavity = apply_patch(cavity, "core_eps", args.sc_eps0)
    if getattr(args, "substrate_eps", None) is not None:
        cavity = apply_patch(cavity, "substrate",
                             ConstantDielectric(args.substrate_eps))
    return cavity


def _cavity_from_args(args, catalog, T_K: float) -> CavityConfig:
    base = None
    if args.config:
        spec = load_scenario(args.config, catalog)
        base = spec.base
    m1 = _mirror_from_flags(catalog, args.material1, args.film1_nm, args.substrate1)
    m2 = _mirror_from_flags(catalog, args.material2, args.film2_nm, args.substrate2)
    a = args.a_nm
    if base is not None:
        m1 = m1 or base.mirror1
        m2 = m2 or base.mirror2
        a = a if a is not None else base.gap_nm
    if m1 is None or m2 is None or a is None:
        raise ScenarioError(
            "cavity underspecified: need --material1, --material2 and --a-nm "
            "(or a --config providing them)"
        )
    return _apply_overrides(CavityConfig(m1, m2, a, T_K), args)


def _fmt_result(res) -> str:
    return (
        f"P = {res.pressure_Pa:.10e} Pa\n"
        f"  terms_used        = {res.sum_diag.terms_used}\n"
        f"  quad_error        = {res.quad_error_Pa:.3e} Pa\n"
        f"  truncation_bound  = {res.sum_diag.truncation_bound:.3e} Pa\n"
        f"  last_term_ratio   = {res.sum_diag.last_term_ratio:.3e}"
    )


def cmd_pressure(args) -> int:
    catalog = _catalog(args)
    if args.T_K is None:
        raise ScenarioError("pressure requires --T-K")
    cav = _cavity_from_args(args, catalog, args.T_K)
    res = pressure(cav, _settings(args))
    print(_fmt_result(res))
    return 0


def cmd_delta(args) -> int:
    catalog = _catalog(args)
    settings = _settings(args)
    if args.scenario:
        spec = builtin_scenario(args.scenario, catalog)
        if isinstance(spec, ResponseCurveSpec):
            raise ScenarioError(
                f"{args.scenario} is a response curve; use the response command"
            )
        base = spec.base
        cav = base
        if spec.variants and spec.variants[0].field != "none":
            from .scenarios import apply_patch
            cav = apply_patch(base, spec.variants[0].field, spec.variants[0].value)
        cav = _apply_overrides(cav, args)
        t_ref = args.T_ref_K if args.T_ref_K is not None else spec.t_ref_K
    else:
        cav = _cavity_from_args(args, catalog, 1.0)
        t_ref = args.T_ref_K
    if t_ref is None:
        t_ref = reference_temperature(cav)
    if args.T_over_Tc is not None:
        T = args.T_over_Tc * t_ref
    elif args.T_K is not None:
        T = args.T_K
    else:
        raise ScenarioError("delta requires --T-K or --T-over-Tc")
    cav = replace(cav, temperature_K=T)
    d = delta_pressure(cav, T, t_ref, args.mode, settings)
    print(f"deltaP = {d.delta_Pa * 1e3:.6e} mPa  (T = {T:g} K, T_ref = {t_ref:g} K, "
          f"mode = {args.mode})")
    print(f"P(T)     : {_fmt_result(d.at_T)}")
    print(f"P(T_ref) : {_fmt_result(d.at_ref)}")
    print(f"combined error bound = {d.combined_error_Pa * 1e3:.3e} mPa")
    return 0


def _write_table(table, out_path: str):
    Path(out_path).write_text(table.to_csv())
    bad = [e for e in table.row_errors if e]
    print(f"wrote {out_path} ({len(table.rows)} rows)")
    for e in bad:
        print(f"warning: row failed: {e}", file=sys.stderr)


def cmd_sweep(args) -> int:
    catalog = _catalog(args)
    settings = _settings(args)
    if args.builtin:
        spec = builtin_scenario(args.builtin, catalog)
    else:
        spec = load_scenario(args.config, catalog)
    if isinstance(spec, ResponseCurveSpec):
        table = run_response(spec)
    else:
        if getattr(args, "sc_eps0", None) is not None:
            from .scenarios import apply_patch
            spec = replace(spec, base=apply_patch(spec.base, "core_eps", args.sc_eps0))
        table = run_sweep(spec, settings)
    _write_table(table, args.out)
    return 0


def cmd_response(args) -> int:
    catalog = _catalog(args)
    spec = builtin_scenario(args.builtin, catalog)
    table = run_response(spec)
    _write_table(table, args.out)
    return 0


def cmd_validate(args) -> int:
    from .validate import run_checks

    results = run_checks(only=args.only)
    if not results:
        print(f"error: no checks match {args.only!r}", file=sys.stderr)
        return USAGE_ERROR
    n_fail = sum(not r.passed for r in results)
    total = sum(r.seconds for r in results)
    print(f"{len(results) - n_fail}/{len(results)} checks passed "
          f"in {total:.0f}s")
    return VALIDATION_ERROR if n_fail else 0


def cmd_materials(args) -> int:
    catalog = _catalog(args)
    print(f"# material database: {catalog.source}")
    for rec in catalog.records():
        print(f"{rec.name:10s} {rec.kind}")
    print("vacuum     builtin")
    if "perfect" not in catalog.names():
        print("perfect    builtin")
    return 0


_COMMANDS = {
    "pressure": cmd_pressure,
    "delta": cmd_delta,
    "sweep": cmd_sweep,
    "response": cmd_response,
    "validate": cmd_validate,
    "materials": cmd_materials,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except (ScenarioError, MaterialError, CavityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except NumericsError as exc:
        print(f"error: numerical failure: {exc} "
              f"(best estimate {exc.best_value:g}, bound {exc.error_bound:g})",
              file=sys.stderr)
        return NUMERICAL_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
