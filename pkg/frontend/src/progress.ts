// Geometry for the progress chart: two series over revision number,
// error count and CEFR ordinal, computed without touching the DOM.

import type { ProgressPoint } from "./types";

export const LEVEL_NAMES = ["A1", "A2", "B1", "B2", "C1", "C2"] as const;

/** CEFR level name to its 1-based ordinal (A1 = 1 .. C2 = 6). */
export function cefrOrdinal(name: string): number {
  const idx = LEVEL_NAMES.indexOf(name as (typeof LEVEL_NAMES)[number]);
  if (idx < 0) throw new RangeError(`unknown level name: ${name}`);
  return idx + 1;
}

export interface ChartMarker {
  x: number;
  y: number;
  revision: number;
  value: number;
  label: string;
}

export interface ChartModel {
  kind: "empty" | "single" | "series";
  width: number;
  height: number;
  /** SVG polyline points ("x,y x,y ..."); empty string when under 2 points */
  errorLine: string;
  levelLine: string;
  errorMarkers: ChartMarker[];
  levelMarkers: ChartMarker[];
  xTicks: { x: number; label: string }[];
}

const PAD = 28;

function positions(count: number, width: number): number[] {
  if (count === 1) return [width / 2];
  const step = (width - 2 * PAD) / (count - 1);
  return Array.from({ length: count }, (_v, i) => PAD + i * step);
}

// higher values sit higher on screen, hence the flipped SVG y
function yFor(value: number, max: number, height: number): number {
  const usable = height - 2 * PAD;
  return PAD + (1 - value / max) * usable;
}

export function buildChart(points: ProgressPoint[], width = 420, height = 180): ChartModel {
  const base: ChartModel = {
    kind: "empty",
    width,
    height,
    errorLine: "",
    levelLine: "",
    errorMarkers: [],
    levelMarkers: [],
    xTicks: [],
  };
  if (points.length === 0) return base;

  const xs = positions(points.length, width);
  const maxError = Math.max(1, ...points.map((p) => p.error_count));
  const errorMarkers = points.map((p, i) => ({
    x: xs[i],
    y: yFor(p.error_count, maxError, height),
    revision: p.revision_no,
    value: p.error_count,
    label: String(p.error_count),
  }));
  const levelMarkers = points.map((p, i) => ({
    x: xs[i],
    y: yFor(cefrOrdinal(p.cefr), LEVEL_NAMES.length, height),
    revision: p.revision_no,
    value: cefrOrdinal(p.cefr),
    label: p.cefr,
  }));
  const toLine = (markers: ChartMarker[]) =>
    markers.map((m) => `${m.x.toFixed(1)},${m.y.toFixed(1)}`).join(" ");

  return {
    ...base,
    kind: points.length === 1 ? "single" : "series",
    errorLine: points.length > 1 ? toLine(errorMarkers) : "",
    levelLine: points.length > 1 ? toLine(levelMarkers) : "",
    errorMarkers,
    levelMarkers,
    xTicks: points.map((p, i) => ({ x: xs[i], label: String(p.revision_no) })),
  };
}
