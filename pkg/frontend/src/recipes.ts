/**
 * Figure recipes: which CSV columns each figure plots, axis labels and
 * scales, and the line-style roles (as-modeled solid, no-transition
 * reference dashed, eps0=10 companion dotted).
 */

import { CsvTable, CsvError, column } from "./csv";
import { PlotSpec, ScaleKind, Series } from "./svg";

export interface SeriesSpec {
  column: string;
  label: string;
  style: Series["style"];
  color: string;
}

export interface FigureRecipe {
  name: string;
  title: string;
  xColumn: string;
  xLabel: string;
  yLabel: string;
  xScale: ScaleKind;
  yScale: ScaleKind;
  series: SeriesSpec[];
  /** applied to x values (e.g. nm -> um for the film-thickness axes) */
  xTransform?: (v: number) => number;
}

const RED = "#c0392b";
const BLUE = "#2955a3";
const BLACK = "#222222";

export const RECIPES: FigureRecipe[] = [
  {
    name: "fig1",
    title: "Mattis-Bardeen g vs frequency (NbTiN)",
    xColumn: "xi_over_2delta0",
    xLabel: "xi / 2 Delta(0)",
    yLabel: "g(xi)",
    xScale: "log",
    yScale: "log",
    series: [
      { column: "g__T0p1", label: "T/Tc = 0.1", style: "solid", color: RED },
      { column: "g__T0p9", label: "T/Tc = 0.9", style: "solid", color: BLUE },
    ],
  },
  {
    name: "fig2",
    title: "Permittivity on the imaginary axis (NbTiN)",
    xColumn: "xi_over_2delta0",
    xLabel: "xi / 2 Delta(0)",
    yLabel: "eps(i xi)",
    xScale: "log",
    yScale: "log",
    series: [
      { column: "eps_bcs__T0p1", label: "BCS, T/Tc = 0.1", style: "solid", color: RED },
      { column: "eps_bcs__T0p9", label: "BCS, T/Tc = 0.9", style: "solid", color: BLUE },
      { column: "eps_drude", label: "Drude", style: "dashed", color: BLACK },
      { column: "eps_twofluid__T0p1", label: "two-fluid, T/Tc = 0.1", style: "dotdash", color: RED },
      { column: "eps_twofluid__T0p9", label: "two-fluid, T/Tc = 0.9", style: "dotdash", color: BLUE },
    ],
  },
  {
    name: "fig3",
    title: "Pressure variation, Al-Al cavity (a = 100 nm)",
    xColumn: "T_K",
    xLabel: "T (K)",
    yLabel: "deltaP (mPa)",
    xScale: "lin",
    yScale: "lin",
    series: [
      { column: "deltaP_mPa", label: "superconducting", style: "solid", color: BLUE },
      { column: "deltaP_normal_mPa", label: "no transition", style: "dashed", color: BLACK },
    ],
  },
  {
    name: "fig4",
    title: "Pressure variation vs Al film thickness (on SiN)",
    xColumn: "w_nm",
    xLabel: "w (um)",
    yLabel: "deltaP (mPa)",
    xScale: "log",
    yScale: "lin",
    xTransform: (nm) => nm / 1000,
    series: [
      { column: "deltaP_mPa", label: "Al film on SiN", style: "solid", color: BLUE },
    ],
  },
  {
    name: "fig5",
    title: "Pressure variation, NbTiN-NbTiN cavity (a = 100 nm)",
    xColumn: "T_K",
    xLabel: "T (K)",
    yLabel: "deltaP (mPa)",
    xScale: "lin",
    yScale: "lin",
    series: [
      { column: "deltaP_mPa__eps0_1", label: "eps0 = 1", style: "solid", color: BLUE },
      { column: "deltaP_mPa__eps0_10", label: "eps0 = 10", style: "dotted", color: BLUE },
      { column: "deltaP_normal_mPa", label: "no transition", style: "dashed", color: BLACK },
    ],
  },
  {
    name: "fig6",
    title: "Pressure variation, Au-NbTiN cavity (a = 100 nm)",
    xColumn: "T_K",
    xLabel: "T (K)",
    yLabel: "deltaP (mPa)",
    xScale: "lin",
    yScale: "lin",
    series: [
      { column: "deltaP_mPa__eps0_1", label: "eps0 = 1", style: "solid", color: BLUE },
      { column: "deltaP_mPa__eps0_10", label: "eps0 = 10", style: "dotted", color: BLUE },
      { column: "deltaP_normal_mPa", label: "no transition", style: "dashed", color: BLACK },
    ],
  },
  {
    name: "fig7",
    title: "Pressure variation vs separation, Au-NbTiN (T = 0.5 Tc)",
    xColumn: "a_nm",
    xLabel: "a (nm)",
    yLabel: "deltaP (mPa)",
    xScale: "lin",
    yScale: "lin",
    series: [
      { column: "deltaP_mPa__rrr_1p12", label: "RRR = 1.12", style: "solid", color: RED },
      { column: "deltaP_mPa__rrr_5", label: "RRR = 5", style: "solid", color: BLUE },
    ],
  },
  {
    name: "fig8",
    title: "Pressure variation vs NbTiN RRR, Au-NbTiN",
    xColumn: "rrr_sc",
    xLabel: "RRR (NbTiN)",
    yLabel: "deltaP (mPa)",
    xScale: "lin",
    yScale: "lin",
    series: [
      { column: "deltaP_mPa__a_100nm", label: "a = 100 nm", style: "solid", color: RED },
      { column: "deltaP_mPa__a_60nm", label: "a = 60 nm", style: "solid", color: BLUE },
    ],
  },
  {
    name: "fig9",
    title: "Pressure variation vs Au RRR, Au-NbTiN",
    xColumn: "rrr_au",
    xLabel: "RRR (Au)",
    yLabel: "deltaP (mPa)",
    xScale: "lin",
    yScale: "lin",
    series: [
      { column: "deltaP_mPa__a_100nm", label: "a = 100 nm", style: "solid", color: RED },
      { column: "deltaP_mPa__a_60nm", label: "a = 60 nm", style: "solid", color: BLUE },
    ],
  },
  {
    name: "fig10",
    title: "Pressure variation vs NbTiN film thickness (on Au cavity)",
    xColumn: "w_nm",
    xLabel: "w (um)",
    yLabel: "deltaP (mPa)",
    xScale: "log",
    yScale: "lin",
    xTransform: (nm) => nm / 1000,
    series: [
      { column: "deltaP_mPa__freestanding", label: "free-standing", style: "solid", color: BLUE },
      { column: "deltaP_mPa__sub_eps10", label: "substrate eps = 10", style: "dashed", color: BLACK },
    ],
  },
];

export function recipeByName(name: string): FigureRecipe {
  const r = RECIPES.find((x) => x.name === name);
  if (!r) {
    throw new CsvError(
      `unknown figure ${name}; valid: ${RECIPES.map((x) => x.name).join(", ")}`
    );
  }
  return r;
}

export function buildPlot(recipe: FigureRecipe, table: CsvTable): PlotSpec {
  if (table.scenario !== recipe.name) {
    throw new CsvError(
      `CSV is tagged scenario=${table.scenario}, recipe expects ${recipe.name}`
    );
  }
  const rawX = column(table, recipe.xColumn);
  const x = recipe.xTransform ? rawX.map(recipe.xTransform) : rawX;
  const series: Series[] = recipe.series.map((s) => ({
    label: s.label,
    x,
    y: column(table, s.column),
    style: s.style,
    color: s.color,
  }));
  return {
    title: recipe.title,
    xLabel: recipe.xLabel,
    yLabel: recipe.yLabel,
    xScale: recipe.xScale,
    yScale: recipe.yScale,
    series,
  };
}
