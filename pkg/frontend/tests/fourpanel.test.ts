import { describe, expect, it } from "vitest";

import { buildFourPanel } from "../src/fourpanel.js";
import { boxStats } from "../src/boxplot.js";
import type { ScoredPitchRow } from "../src/types.js";

function row(overrides: Partial<ScoredPitchRow>): ScoredPitchRow {
  return {
    game_pk: "g1", at_bat_number: 1, pitch_number: 1, year: 2019,
    batter_id: "b1", plate_x: 0, plate_z: 2.5,
    balls: 0, strikes: 0, outs: 0,
    on_first: false, on_second: false, on_third: false,
    sz_top: 3.5, sz_bot: 1.5,
    actual: "take", mean_evdiff: -0.05, lo: -0.1, hi: 0.0,
    p_swing_optimal: 0.3, optimal: "take", panel: null,
    ...overrides,
  };
}

const FIXTURE: ScoredPitchRow[] = [
  row({ actual: "take", optimal: "take", panel: "a", plate_x: -1.2, outs: 0 }),
  row({ actual: "swing", optimal: "take", panel: "b", plate_x: 1.1, outs: 1 }),
  row({ actual: "take", optimal: "swing", panel: "c", plate_x: 0.1, outs: 2,
        mean_evdiff: 0.08, p_swing_optimal: 0.9 }),
  row({ actual: "swing", optimal: "swing", panel: "d", plate_x: 0.0, outs: 2,
        mean_evdiff: 0.1, p_swing_optimal: 0.95 }),
];

describe("four-panel view-model", () => {
  it("places the four-pitch fixture one point per panel", () => {
    const vm = buildFourPanel(FIXTURE);
    expect(vm.panels.a.length).toBe(1);
    expect(vm.panels.b.length).toBe(1);
    expect(vm.panels.c.length).toBe(1);
    expect(vm.panels.d.length).toBe(1);
    expect(vm.nShown).toBe(4);
  });

  it("derives the panel from decisions when the column is absent", () => {
    const rows = FIXTURE.map((r) => ({ ...r, panel: null }));
    const vm = buildFourPanel(rows);
    expect(vm.panels.a[0].raw.plate_x).toBe(-1.2);
    expect(vm.panels.d[0].raw.plate_x).toBe(0.0);
  });

  it("toggling the shade changes colors but never point positions", () => {
    const byEdge = buildFourPanel(FIXTURE, "evdiff");
    const byCertainty = buildFourPanel(FIXTURE, "certainty");
    for (const panel of ["a", "b", "c", "d"] as const) {
      const a = byEdge.panels[panel];
      const b = byCertainty.panels[panel];
      expect(a.map((p) => [p.x, p.z])).toEqual(b.map((p) => [p.x, p.z]));
    }
    expect(byEdge.panels.d[0].cssColor).not.toBe(byCertainty.panels.d[0].cssColor);
  });

  it("outs filter hides exactly the non-matching pitches", () => {
    const vm = buildFourPanel(FIXTURE, "evdiff", { outs: 2, baserunners: null });
    expect(vm.nShown).toBe(2);
    expect(vm.panels.a.length).toBe(0);
    expect(vm.panels.b.length).toBe(0);
    expect(vm.panels.c.length).toBe(1);
    expect(vm.panels.d.length).toBe(1);
    for (const point of [...vm.panels.c, ...vm.panels.d]) {
      expect(point.raw.outs).toBe(2);
    }
  });

  it("empty panels stay empty rather than failing", () => {
    const vm = buildFourPanel([FIXTURE[0]]);
    expect(vm.panels.b).toEqual([]);
    expect(vm.panels.c).toEqual([]);
    expect(vm.panels.d).toEqual([]);
  });

  it("baserunner filter counts total runners on", () => {
    const rows = [
      row({ on_first: true, on_second: true, panel: "a" }),
      row({ on_first: false, panel: "a" }),
    ];
    const vm = buildFourPanel(rows, "evdiff", { outs: null, baserunners: 2 });
    expect(vm.nShown).toBe(1);
    expect(vm.panels.a[0].raw.on_second).toBe(true);
  });
});

describe("boxplot stats", () => {
  it("uses order-statistic quantiles like the engine", () => {
    const draws = Array.from({ length: 20 }, (_, i) => (i + 1) / 10);
    const stats = boxStats(draws);
    expect(stats.lo).toBeCloseTo(0.1, 12); // ceil(0.05*20) = 1st order stat
    expect(stats.hi).toBeCloseTo(1.9, 12); // ceil(0.95*20) = 19th
    expect(stats.median).toBeCloseTo(1.0, 12);
  });

  it("rejects empty draw vectors", () => {
    expect(() => boxStats([])).toThrow();
  });
});
