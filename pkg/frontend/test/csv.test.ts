import { describe, expect, it } from "vitest";

import { CsvError, column, parseCsv } from "../src/csv";

const GOOD = [
  "# supercasimir v0.1.0 scenario=fig3",
  "# a_nm=100 mode=both",
  "T_K,deltaP_mPa,err_mPa",
  "6.0e-01,-4.2e-02,1.0e-05",
  "1.2e+00,0.0e+00,1.0e-05",
].join("\n");

describe("parseCsv", () => {
  it("parses the supercasimir contract", () => {
    const t = parseCsv(GOOD);
    expect(t.version).toBe("0.1.0");
    expect(t.scenario).toBe("fig3");
    expect(t.meta.a_nm).toBe("100");
    expect(t.columns).toEqual(["T_K", "deltaP_mPa", "err_mPa"]);
    expect(t.rows).toHaveLength(2);
    expect(column(t, "deltaP_mPa")).toEqual([-0.042, 0]);
  });

  it("rejects a missing header", () => {
    expect(() => parseCsv("a,b\n1,2\n3,4\n")).toThrow(CsvError);
  });

  it("rejects an empty table", () => {
    const empty = GOOD.split("\n").slice(0, 3).join("\n");
    expect(() => parseCsv(empty)).toThrow(/no data rows/);
  });

  it("rejects ragged rows", () => {
    expect(() => parseCsv(GOOD + "\n1.0,2.0")).toThrow(/expected 3/);
  });

  it("rejects unknown columns on lookup", () => {
    expect(() => column(parseCsv(GOOD), "bananas")).toThrow(/missing column/);
  });
});
