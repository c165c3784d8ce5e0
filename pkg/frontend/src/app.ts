/**
 * Analyst console wiring: controls mutate the explorer state, the state is
 * mirrored into the URL fragment, and each change issues exactly one API
 * request whose response (if still fresh) re-renders the active view.
 */

import { ApiClient } from "./api.js";
import { buildFourPanel, type ShadeMode } from "./fourpanel.js";
import { buildHeatmap } from "./heatmap.js";
import { renderBoxplots, renderFourPanel, renderHeatmap } from "./render.js";
import {
  DEFAULT_STATE,
  decodeState,
  encodeState,
  whatifRequest,
  type ExplorerState,
  type ViewMode,
} from "./state.js";
import type { BatterReportResponse } from "./types.js";

const api = new ApiClient("");
let state: ExplorerState = DEFAULT_STATE;
let shade: ShadeMode = "evdiff";
let report: BatterReportResponse | null = null;

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function syncUrl(): void {
  window.history.replaceState(null, "", `#${encodeState(state)}`);
}

function showBanner(message: string | null): void {
  const banner = $("banner");
  banner.textContent = message ?? "";
  banner.style.display = message ? "block" : "none";
}

async function refreshHeatmap(): Promise<void> {
  syncUrl();
  try {
    const result = await api.whatif(whatifRequest(state));
    if (result === null) return; // superseded by a newer query
    showBanner(null);
    const vm = buildHeatmap(result.body, state.view);
    const host = $("heatmap");
    host.replaceChildren(renderHeatmap(vm));
    $("heatmap-note").textContent =
      `${vm.perspective} | ${result.body.n_draws} draws, seed ${result.body.seed}`;
  } catch (err) {
    showBanner(`request failed: ${(err as Error).message} (adjust and retry)`);
  }
}

function renderReport(): void {
  if (!report) return;
  const vm = buildFourPanel(report.pitches, shade, {
    outs: state.outsFilter,
    baserunners: null,
  });
  $("fourpanel").replaceChildren(renderFourPanel(vm));
  $("report-summary").textContent =
    `${report.batter_id} ${report.season}: ${report.n_pitches} pitches, ` +
    `optimal-rate ${report.proportion_optimal.mean.toFixed(3)} ` +
    `[${report.proportion_optimal.lo.toFixed(3)}, ${report.proportion_optimal.hi.toFixed(3)}]` +
    (report.qualified ? "" : " (below qualification threshold)");
  $("boxplots").replaceChildren(renderBoxplots([
    { label: "optimal rate", draws: report.proportion_optimal_draws },
    { label: "runs added", draws: report.runs_added_draws },
    { label: "runs lost", draws: report.runs_lost_draws },
  ]));
}

async function refreshReport(): Promise<void> {
  syncUrl();
  if (!state.browseBatter) return;
  try {
    report = await api.batterReport(
      state.browseBatter, state.browseSeason ?? undefined, 0,
    );
    showBanner(null);
    renderReport();
  } catch (err) {
    showBanner(`report failed: ${(err as Error).message}`);
  }
}

function bindControls(): void {
  const game = state.game;
  const bind = (id: string, apply: (value: string) => void, after = refreshHeatmap) => {
    const el = $(id) as HTMLInputElement | HTMLSelectElement;
    el.addEventListener("change", () => {
      apply(el.value);
      void after();
    });
  };
  bind("balls", (v) => { game.balls = Number(v); });
  bind("strikes", (v) => { game.strikes = Number(v); });
  bind("outs", (v) => { game.outs = Number(v); });
  bind("on-first", (v) => { game.on_first = v === "1"; });
  bind("on-second", (v) => { game.on_second = v === "1"; });
  bind("on-third", (v) => { game.on_third = v === "1"; });
  bind("score-diff", (v) => { game.score_diff = Number(v); });
  bind("inning", (v) => { game.inning = Number(v); });
  bind("half", (v) => { game.top_inning = v === "T"; });
  bind("batter", (v) => { state.batterId = v || "GENERIC"; });
  bind("pitcher", (v) => { state.pitcherId = v || "GENERIC"; });
  bind("batter-hand", (v) => { state.batterHand = v === "L" ? "L" : "R"; });
  bind("pitcher-hand", (v) => { state.pitcherHand = v === "L" ? "L" : "R"; });
  bind("view", (v) => { state.view = v as ViewMode; });
  bind("seed", (v) => { state.seed = Number(v); });

  bind("browse-batter", (v) => { state.browseBatter = v || null; }, refreshReport);
  bind("outs-filter", (v) => {
    state.outsFilter = v === "" ? null : Number(v);
  }, async () => { syncUrl(); renderReport(); });
  const shadeEl = $("shade") as HTMLSelectElement;
  shadeEl.addEventListener("change", () => {
    shade = shadeEl.value as ShadeMode;
    renderReport();
  });
}

function applyStateToControls(): void {
  const set = (id: string, value: string) => {
    ($(id) as HTMLInputElement).value = value;
  };
  const game = state.game;
  set("balls", String(game.balls));
  set("strikes", String(game.strikes));
  set("outs", String(game.outs));
  set("on-first", game.on_first ? "1" : "0");
  set("on-second", game.on_second ? "1" : "0");
  set("on-third", game.on_third ? "1" : "0");
  set("score-diff", String(game.score_diff));
  set("inning", String(game.inning));
  set("half", game.top_inning ? "T" : "B");
  set("batter", state.batterId);
  set("pitcher", state.pitcherId);
  set("batter-hand", state.batterHand);
  set("pitcher-hand", state.pitcherHand);
  set("view", state.view);
  set("seed", String(state.seed));
  set("browse-batter", state.browseBatter ?? "");
  set("outs-filter", state.outsFilter === null ? "" : String(state.outsFilter));
}

async function boot(): Promise<void> {
  if (window.location.hash.length > 1) {
    state = decodeState(window.location.hash);
  }
  applyStateToControls();
  bindControls();
  window.addEventListener("hashchange", () => {
    state = decodeState(window.location.hash);
    applyStateToControls();
    void refreshHeatmap();
    void refreshReport();
  });
  await refreshHeatmap();
  await refreshReport();
}

void boot();
