/** Thin DOM layer: view-models in, elements out. No numeric work here. */

import { boxStats } from "./boxplot.js";
import type { FourPanelViewModel, PanelId } from "./fourpanel.js";
import { PANEL_LABELS } from "./fourpanel.js";
import type { HeatmapViewModel } from "./heatmap.js";

const SVG = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K, attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

interface PlotFrame {
  svg: SVGSVGElement;
  toPx: (x: number, z: number) => [number, number];
  plot: { x0: number; x1: number; z0: number; z1: number };
}

function plotFrame(width: number, height: number,
                   x0: number, x1: number, z0: number, z1: number): PlotFrame {
  const svg = svgEl("svg", { width, height, viewBox: `0 0 ${width} ${height}` });
  const toPx = (x: number, z: number): [number, number] => [
    ((x - x0) / (x1 - x0)) * width,
    height - ((z - z0) / (z1 - z0)) * height,
  ];
  return { svg, toPx, plot: { x0, x1, z0, z1 } };
}

function zoneOverlay(frame: PlotFrame, halfWidth: number, bottom: number, top: number) {
  const [px0, pz0] = frame.toPx(-halfWidth, top);
  const [px1, pz1] = frame.toPx(halfWidth, bottom);
  return svgEl("rect", {
    x: px0, y: pz0, width: px1 - px0, height: pz1 - pz0,
    fill: "none", stroke: "#222", "stroke-width": 1.5, "stroke-dasharray": "4 3",
  });
}

export function renderHeatmap(vm: HeatmapViewModel, width = 420, height = 420): SVGSVGElement {
  const xs = vm.cells.map((c) => c.x);
  const zs = vm.cells.map((c) => c.z);
  const dx = vm.nx > 1 ? (Math.max(...xs) - Math.min(...xs)) / (vm.nx - 1) : 0.2;
  const dz = vm.nz > 1 ? (Math.max(...zs) - Math.min(...zs)) / (vm.nz - 1) : 0.2;
  const frame = plotFrame(
    width, height,
    Math.min(...xs) - dx / 2, Math.max(...xs) + dx / 2,
    Math.min(...zs) - dz / 2, Math.max(...zs) + dz / 2,
  );
  for (const cell of vm.cells) {
    const [px, pz] = frame.toPx(cell.x - dx / 2, cell.z + dz / 2);
    const [px2, pz2] = frame.toPx(cell.x + dx / 2, cell.z - dz / 2);
    const rect = svgEl("rect", {
      x: px, y: pz, width: px2 - px, height: pz2 - pz, fill: cell.cssColor,
    });
    const title = document.createElementNS(SVG, "title");
    title.textContent = cell.hover;
    rect.appendChild(title);
    frame.svg.appendChild(rect);
  }
  frame.svg.appendChild(zoneOverlay(frame, vm.zone.half_width, vm.zone.bottom, vm.zone.top));
  return frame.svg;
}

export function renderFourPanel(vm: FourPanelViewModel, width = 640, height = 640): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "four-panel";
  const order: PanelId[] = ["a", "d", "c", "b"];  // top row: agreement panels
  for (const id of order) {
    const panelDiv = document.createElement("div");
    panelDiv.className = `panel panel-${id}`;
    const label = document.createElement("div");
    label.className = "panel-label";
    label.textContent = `${id}: ${PANEL_LABELS[id]} (${vm.panels[id].length})`;
    panelDiv.appendChild(label);
    const frame = plotFrame(width / 2 - 10, height / 2 - 28, -2, 2, 0.5, 4.5);
    for (const point of vm.panels[id]) {
      const [px, pz] = frame.toPx(point.x, point.z);
      const dot = svgEl("circle", { cx: px, cy: pz, r: 3.2, fill: point.cssColor });
      const title = document.createElementNS(SVG, "title");
      title.textContent = point.hover;
      dot.appendChild(title);
      frame.svg.appendChild(dot);
    }
    frame.svg.appendChild(zoneOverlay(frame, 0.83, 1.5, 3.5));
    panelDiv.appendChild(frame.svg);
    wrap.appendChild(panelDiv);
  }
  return wrap;
}

export function renderBoxplots(
  series: { label: string; draws: number[] }[], width = 420, rowHeight = 34,
): SVGSVGElement {
  const stats = series.map((s) => ({ label: s.label, box: boxStats(s.draws) }));
  const all = stats.flatMap((s) => [s.box.lo, s.box.hi]);
  const lo = Math.min(...all);
  const hi = Math.max(...all);
  const pad = (hi - lo || 1) * 0.08;
  const height = rowHeight * stats.length + 16;
  const svg = svgEl("svg", { width, height, viewBox: `0 0 ${width} ${height}` });
  const toX = (v: number) => ((v - lo + pad) / (hi - lo + 2 * pad)) * (width - 120) + 110;
  stats.forEach((s, i) => {
    const cy = i * rowHeight + rowHeight / 2 + 8;
    const text = svgEl("text", { x: 4, y: cy + 4, "font-size": 12 });
    text.textContent = s.label;
    svg.appendChild(text);
    svg.appendChild(svgEl("line", {
      x1: toX(s.box.lo), y1: cy, x2: toX(s.box.hi), y2: cy,
      stroke: "#555", "stroke-width": 1,
    }));
    svg.appendChild(svgEl("rect", {
      x: toX(s.box.q1), y: cy - 8, width: Math.max(1, toX(s.box.q3) - toX(s.box.q1)),
      height: 16, fill: "#9ecae1", stroke: "#3182bd",
    }));
    svg.appendChild(svgEl("line", {
      x1: toX(s.box.median), y1: cy - 8, x2: toX(s.box.median), y2: cy + 8,
      stroke: "#08306b", "stroke-width": 2,
    }));
  });
  return svg;
}
