/** Render one figure recipe from a CSV file to an SVG file. */

import * as fs from "fs";
import * as path from "path";

import { CsvError, parseCsv } from "./csv";
import { FigureRecipe, buildPlot } from "./recipes";
import { renderSvg } from "./svg";

export function renderFigure(
  recipe: FigureRecipe,
  csvPath: string,
  outPath: string
): void {
  let text: string;
  try {
    text = fs.readFileSync(csvPath, "utf8");
  } catch {
    throw new CsvError(`cannot read ${csvPath}`);
  }
  const table = parseCsv(text);
  const svg = renderSvg(buildPlot(recipe, table));
  fs.mkdirSync(path.dirname(outPath), { recursive: true });
  fs.writeFileSync(outPath, svg);
}
