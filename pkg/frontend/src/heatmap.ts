/**
 * Heatmap view-model: API cells plus a view mode become a color matrix with
 * a strike-zone overlay. All numbers come straight from the API; hover text
 * exposes the raw values so nothing is recomputed client-side.
 */

import { css, divergingColor, sequentialColor, type Rgb } from "./colors.js";
import type { ViewMode } from "./state.js";
import type { WhatIfCell, WhatIfResponse, ZoneRect } from "./types.js";

export interface HeatmapCellVm {
  x: number;
  z: number;
  color: Rgb;
  cssColor: string;
  hover: string;
  raw: WhatIfCell;
}

export interface HeatmapViewModel {
  nx: number;
  nz: number;
  cells: HeatmapCellVm[];
  zone: ZoneRect;
  /** symmetric bound used by the diverging scale (0 for probability views) */
  scaleLimit: number;
  view: ViewMode;
  perspective: string;
}

function cellValue(cell: WhatIfCell, view: ViewMode): number {
  switch (view) {
    case "evdiff":
      return cell.mean_evdiff;
    case "p_swing":
      return cell.p_swing_optimal;
    case "p_strike":
      return cell.components.p_strike;
    case "p_contact":
      return cell.components.p_contact;
  }
}

function hoverText(cell: WhatIfCell): string {
  return (
    `x=${cell.x.toFixed(2)} z=${cell.z.toFixed(2)} | ` +
    `edge=${cell.mean_evdiff.toFixed(4)} [${cell.lo.toFixed(4)}, ${cell.hi.toFixed(4)}] | ` +
    `P(swing optimal)=${cell.p_swing_optimal.toFixed(3)} | best=${cell.optimal} | ` +
    `P(strike)=${cell.components.p_strike.toFixed(3)} ` +
    `P(contact)=${cell.components.p_contact.toFixed(3)}`
  );
}

export function buildHeatmap(response: WhatIfResponse, view: ViewMode): HeatmapViewModel {
  let scaleLimit = 0;
  if (view === "evdiff") {
    for (const cell of response.cells) {
      scaleLimit = Math.max(scaleLimit, Math.abs(cell.mean_evdiff));
    }
    if (scaleLimit === 0) scaleLimit = 1e-9;
  }
  const cells = response.cells.map((cell) => {
    const value = cellValue(cell, view);
    const color =
      view === "evdiff" ? divergingColor(value, scaleLimit) : sequentialColor(value);
    return { x: cell.x, z: cell.z, color, cssColor: css(color), hover: hoverText(cell), raw: cell };
  });
  return {
    nx: response.grid.nx,
    nz: response.grid.nz,
    cells,
    zone: response.zone,
    scaleLimit,
    view,
    perspective: "view from behind home plate (umpire's perspective)",
  };
}

/** Color matrix indexed [ix][iz]; cells arrive x-major from the API. */
export function colorMatrix(vm: HeatmapViewModel): Rgb[][] {
  const out: Rgb[][] = [];
  for (let ix = 0; ix < vm.nx; ix += 1) {
    const column: Rgb[] = [];
    for (let iz = 0; iz < vm.nz; iz += 1) {
      column.push(vm.cells[ix * vm.nz + iz].color);
    }
    out.push(column);
  }
  return out;
}
