/**
 * Minimal deterministic SVG plotting: linear/log scales, axes with ticks,
 * polyline series with line-style roles, and a legend.  No dates, no
 * randomness, fixed fonts and canvas size, so output bytes depend only on
 * the input data.
 */

export type ScaleKind = "lin" | "log";

export interface Series {
  label: string;
  x: number[];
  y: number[];
  style: "solid" | "dashed" | "dotted" | "dotdash";
  color: string;
}

export interface PlotSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  xScale: ScaleKind;
  yScale: ScaleKind;
  series: Series[];
}

const W = 720;
const H = 540;
const MARGIN = { left: 86, right: 24, top: 40, bottom: 62 };
const DASH: Record<Series["style"], string> = {
  solid: "",
  dashed: "10,6",
  dotted: "2,5",
  dotdash: "12,5,2,5",
};

function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) {
    return v.toExponential(0).replace("e+0", "e").replace("e-0", "e-");
  }
  return String(parseFloat(v.toPrecision(6)));
}

function px(v: number): string {
  return v.toFixed(2);
}

class Scale {
  constructor(
    readonly kind: ScaleKind,
    readonly d0: number,
    readonly d1: number,
    readonly r0: number,
    readonly r1: number
  ) {
    if (kind === "log" && (d0 <= 0 || d1 <= 0)) {
      throw new Error("log scale requires positive data");
    }
  }

  map(v: number): number {
    const [a, b] =
      this.kind === "log"
        ? [Math.log10(this.d0), Math.log10(this.d1)]
        : [this.d0, this.d1];
    const t = ((this.kind === "log" ? Math.log10(v) : v) - a) / (b - a || 1);
    return this.r0 + t * (this.r1 - this.r0);
  }

  ticks(): number[] {
    if (this.kind === "log") {
      const lo = Math.ceil(Math.log10(this.d0) - 1e-9);
      const hi = Math.floor(Math.log10(this.d1) + 1e-9);
      const out: number[] = [];
      const step = Math.max(1, Math.floor((hi - lo) / 8) + (hi - lo > 8 ? 1 : 0));
      for (let e = lo; e <= hi; e += step) out.push(Math.pow(10, e));
      return out.length >= 2 ? out : [this.d0, this.d1];
    }
    const span = this.d1 - this.d0;
    if (span <= 0) return [this.d0];
    const raw = span / 6;
    const mag = Math.pow(10, Math.floor(Math.log10(raw)));
    const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => span / s <= 7)!;
    const out: number[] = [];
    for (let v = Math.ceil(this.d0 / step) * step; v <= this.d1 + 1e-12 * span; v += step) {
      out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
    }
    return out;
  }
}

function extent(vals: number[], kind: ScaleKind): [number, number] {
  const clean = vals.filter((v) => Number.isFinite(v) && (kind !== "log" || v > 0));
  if (clean.length === 0) throw new Error("no finite data to plot");
  let lo = Math.min(...clean);
  let hi = Math.max(...clean);
  if (kind === "log") {
    return [lo / 1.2, hi * 1.2];
  }
  const pad = (hi - lo || Math.abs(hi) || 1) * 0.06;
  return [lo - pad, hi + pad];
}

export function renderSvg(spec: PlotSpec): string {
  const xs = spec.series.flatMap((s) => s.x);
  const ys = spec.series.flatMap((s) => s.y);
  const [x0, x1] = extent(xs, spec.xScale);
  const [y0, y1] = extent(ys, spec.yScale);
  const sx = new Scale(spec.xScale, x0, x1, MARGIN.left, W - MARGIN.right);
  const sy = new Scale(spec.yScale, y0, y1, H - MARGIN.bottom, MARGIN.top);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" ` +
      `viewBox="0 0 ${W} ${H}" font-family="Helvetica, Arial, sans-serif">`
  );
  parts.push(`<rect width="${W}" height="${H}" fill="white"/>`);
  parts.push(
    `<text x="${W / 2}" y="22" text-anchor="middle" font-size="16">${spec.title}</text>`
  );

  // frame
  const fx0 = MARGIN.left, fx1 = W - MARGIN.right;
  const fy0 = MARGIN.top, fy1 = H - MARGIN.bottom;
  parts.push(
    `<rect x="${fx0}" y="${fy0}" width="${fx1 - fx0}" height="${fy1 - fy0}" ` +
      `fill="none" stroke="black" stroke-width="1"/>`
  );

  for (const t of sx.ticks()) {
    const X = sx.map(t);
    if (X < fx0 - 0.5 || X > fx1 + 0.5) continue;
    parts.push(
      `<line x1="${px(X)}" y1="${fy1}" x2="${px(X)}" y2="${fy1 - 6}" stroke="black"/>`
    );
    parts.push(
      `<text x="${px(X)}" y="${fy1 + 18}" text-anchor="middle" font-size="12">${fmt(t)}</text>`
    );
  }
  for (const t of sy.ticks()) {
    const Y = sy.map(t);
    if (Y < fy0 - 0.5 || Y > fy1 + 0.5) continue;
    parts.push(
      `<line x1="${fx0}" y1="${px(Y)}" x2="${fx0 + 6}" y2="${px(Y)}" stroke="black"/>`
    );
    parts.push(
      `<text x="${fx0 - 8}" y="${px(Y + 4)}" text-anchor="end" font-size="12">${fmt(t)}</text>`
    );
  }
  parts.push(
    `<text x="${(fx0 + fx1) / 2}" y="${H - 16}" text-anchor="middle" font-size="14">${spec.xLabel}</text>`
  );
  parts.push(
    `<text x="20" y="${(fy0 + fy1) / 2}" text-anchor="middle" font-size="14" ` +
      `transform="rotate(-90 20 ${(fy0 + fy1) / 2})">${spec.yLabel}</text>`
  );

  for (const s of spec.series) {
    const pts: string[] = [];
    for (let i = 0; i < s.x.length; i++) {
      const vx = s.x[i], vy = s.y[i];
      if (!Number.isFinite(vx) || !Number.isFinite(vy)) continue;
      if (spec.xScale === "log" && vx <= 0) continue;
      if (spec.yScale === "log" && vy <= 0) continue;
      pts.push(`${px(sx.map(vx))},${px(sy.map(vy))}`);
    }
    if (pts.length === 0) continue;
    const dash = DASH[s.style] ? ` stroke-dasharray="${DASH[s.style]}"` : "";
    parts.push(
      `<polyline points="${pts.join(" ")}" fill="none" stroke="${s.color}" ` +
        `stroke-width="1.8"${dash} data-series="${s.label}" data-style="${s.style}"/>`
    );
  }

  // legend
  let ly = fy0 + 16;
  for (const s of spec.series) {
    const dash = DASH[s.style] ? ` stroke-dasharray="${DASH[s.style]}"` : "";
    parts.push(
      `<line x1="${fx1 - 170}" y1="${ly - 4}" x2="${fx1 - 135}" y2="${ly - 4}" ` +
        `stroke="${s.color}" stroke-width="1.8"${dash}/>`
    );
    parts.push(
      `<text x="${fx1 - 128}" y="${ly}" font-size="12">${s.label}</text>`
    );
    ly += 18;
  }
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
