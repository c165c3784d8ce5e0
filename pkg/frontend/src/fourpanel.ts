/**
 * Four-panel pitch browser view-model: actual decision (columns) crossed
 * with the model's optimal decision (rows). Point positions are pitch
 * locations; shading is either the mean swing edge or the posterior
 * certainty, toggleable without moving any point.
 */

import { css, divergingColor, sequentialColor, type Rgb } from "./colors.js";
import type { ScoredPitchRow } from "./types.js";

export type ShadeMode = "evdiff" | "certainty";
export type PanelId = "a" | "b" | "c" | "d";

export const PANEL_LABELS: Record<PanelId, string> = {
  a: "took, best: take",
  b: "swung, best: take",
  c: "took, best: swing",
  d: "swung, best: swing",
};

export interface PanelPoint {
  x: number;
  z: number;
  color: Rgb;
  cssColor: string;
  hover: string;
  raw: ScoredPitchRow;
}

export interface FourPanelViewModel {
  panels: Record<PanelId, PanelPoint[]>;
  shade: ShadeMode;
  scaleLimit: number;
  nShown: number;
  nTotal: number;
}

export interface PanelFilters {
  outs: number | null;
  baserunners: number | null; // total runners on, 0..3
}

function runnersOn(row: ScoredPitchRow): number {
  return (row.on_first ? 1 : 0) + (row.on_second ? 1 : 0) + (row.on_third ? 1 : 0);
}

function passes(row: ScoredPitchRow, filters: PanelFilters): boolean {
  if (filters.outs !== null && row.outs !== filters.outs) return false;
  if (filters.baserunners !== null && runnersOn(row) !== filters.baserunners) return false;
  return true;
}

function panelOf(row: ScoredPitchRow): PanelId {
  if (row.panel) return row.panel;
  const optimalSwing = row.optimal === "swing";
  if (row.actual === "swing") return optimalSwing ? "d" : "b";
  return optimalSwing ? "c" : "a";
}

function hoverText(row: ScoredPitchRow): string {
  return (
    `${row.game_pk} AB${row.at_bat_number} P${row.pitch_number} | ` +
    `x=${row.plate_x.toFixed(2)} z=${row.plate_z.toFixed(2)} | ` +
    `edge=${row.mean_evdiff.toFixed(4)} [${row.lo.toFixed(4)}, ${row.hi.toFixed(4)}] | ` +
    `P(swing optimal)=${row.p_swing_optimal.toFixed(3)}`
  );
}

export function buildFourPanel(
  rows: ScoredPitchRow[],
  shade: ShadeMode = "evdiff",
  filters: PanelFilters = { outs: null, baserunners: null },
): FourPanelViewModel {
  const shown = rows.filter((row) => passes(row, filters));
  let scaleLimit = 1e-9;
  for (const row of shown) {
    scaleLimit = Math.max(scaleLimit, Math.abs(row.mean_evdiff));
  }
  const panels: Record<PanelId, PanelPoint[]> = { a: [], b: [], c: [], d: [] };
  for (const row of shown) {
    const color =
      shade === "evdiff"
        ? divergingColor(row.mean_evdiff, scaleLimit)
        : sequentialColor(row.p_swing_optimal);
    panels[panelOf(row)].push({
      x: row.plate_x,
      z: row.plate_z,
      color,
      cssColor: css(color),
      hover: hoverText(row),
      raw: row,
    });
  }
  return { panels, shade, scaleLimit, nShown: shown.length, nTotal: rows.length };
}
