#!/usr/bin/env node
/**
 * render_figures <csv_dir> <out_dir> [--only figN]
 *
 * Renders fig1..fig10 from <csv_dir>/<figN>.csv to <out_dir>/<figN>.svg.
 * Exits nonzero if any requested CSV is missing or fails validation.
 */

import * as path from "path";

import { CsvError } from "./csv";
import { RECIPES, recipeByName } from "./recipes";
import { renderFigure } from "./render";

function usage(): never {
  console.error("usage: render_figures <csv_dir> <out_dir> [--only figN]");
  process.exit(2);
}

export function main(argv: string[]): number {
  const args = argv.slice();
  let only: string | null = null;
  const onlyIdx = args.indexOf("--only");
  if (onlyIdx >= 0) {
    if (onlyIdx + 1 >= args.length) usage();
    only = args[onlyIdx + 1];
    args.splice(onlyIdx, 2);
  }
  if (args.length !== 2) usage();
  const [csvDir, outDir] = args;
  const recipes = only ? [recipeByName(only)] : RECIPES;
  let failures = 0;
  for (const recipe of recipes) {
    const csvPath = path.join(csvDir, `${recipe.name}.csv`);
    const outPath = path.join(outDir, `${recipe.name}.svg`);
    try {
      renderFigure(recipe, csvPath, outPath);
      console.log(`rendered ${outPath}`);
    } catch (err) {
      failures++;
      const msg = err instanceof Error ? err.message : String(err);
      console.error(`error: ${recipe.name}: ${msg}`);
    }
  }
  return failures === 0 ? 0 : 1;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
