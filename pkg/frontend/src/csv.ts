/**
 * Parser for the supercasimir CSV contract:
 *
 *   # supercasimir v<version> scenario=<name>
 *   # key=value key=value ...
 *   col1,col2,...
 *   1.23e+00,...
 */

export interface CsvTable {
  version: string;
  scenario: string;
  meta: Record<string, string>;
  columns: string[];
  rows: number[][];
}

export class CsvError extends Error {}

export function parseCsv(text: string): CsvTable {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length < 3) {
    throw new CsvError("CSV too short: expected two header lines and a column row");
  }
  const head = /^# supercasimir v(\S+) scenario=(\S+)$/.exec(lines[0]);
  if (!head) {
    throw new CsvError(`first line is not a supercasimir header: ${lines[0]}`);
  }
  if (!lines[1].startsWith("# ")) {
    throw new CsvError("second line must be the parameter echo");
  }
  const meta: Record<string, string> = {};
  for (const part of lines[1].slice(2).split(" ")) {
    const eq = part.indexOf("=");
    if (eq > 0) meta[part.slice(0, eq)] = part.slice(eq + 1);
  }
  const columns = lines[2].split(",");
  const rows: number[][] = [];
  for (let i = 3; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== columns.length) {
      throw new CsvError(
        `row ${i + 1} has ${cells.length} fields, expected ${columns.length}`
      );
    }
    rows.push(cells.map(Number));
  }
  if (rows.length === 0) {
    throw new CsvError("CSV contains no data rows");
  }
  return { version: head[1], scenario: head[2], meta, columns, rows };
}

export function column(table: CsvTable, name: string): number[] {
  const i = table.columns.indexOf(name);
  if (i < 0) {
    throw new CsvError(
      `missing column ${name}; CSV has [${table.columns.join(", ")}]`
    );
  }
  return table.rows.map((r) => r[i]);
}
