"""Generate golden CSV fixtures for the figure-rendering tests.

Runs every builtin scenario of the primary package on a reduced grid
(same schema and scenario tags, fewer points) and writes the CSVs to
frontend/test/fixtures/.  Rerun after any CSV-contract change:

    python frontend/scripts/make_fixtures.py
"""

from dataclasses import replace
from pathlib import Path

import numpy as np

from supercasimir.scenarios import (
    ResponseCurveSpec,
    builtin_scenario,
    run_response,
    run_sweep,
)

OUT = Path(__file__).resolve().parent.parent / "test" / "fixtures"


def reduced(spec):
    if isinstance(spec, ResponseCurveSpec):
        return replace(spec, xi_over_2delta0=tuple(np.geomspace(1e-3, 1e3, 25).tolist()))
    pts = np.asarray(spec.points)
    if spec.axis == "temperature":
        lo = 0.35 * spec.t_ref_K  # keep fixtures cheap: skip the coldest points
        pts = np.linspace(lo, pts.max(), 5)
    else:
        pts = np.geomspace(pts.min(), pts.max(), 5) if pts.max() / pts.min() > 10 \
            else np.linspace(pts.min(), pts.max(), 5)
    return replace(spec, points=tuple(pts.tolist()))


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name in ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7",
                 "fig8", "fig9", "fig10"):
        spec = reduced(builtin_scenario(name))
        table = run_response(spec) if isinstance(spec, ResponseCurveSpec) else run_sweep(spec)
        path = OUT / f"{name}.csv"
        path.write_text(table.to_csv())
        print(f"wrote {path} ({len(table.rows)} rows)")


if __name__ == "__main__":
    main()
