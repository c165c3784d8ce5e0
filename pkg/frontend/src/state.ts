/**
 * Explorer state and its URL-fragment codec.
 *
 * Every field of the state round-trips losslessly through the fragment, so
 * any view is shareable and back/forward navigation replays exact queries
 * (the draw-subsample seed is part of the state).
 */

import type { GameStateFields } from "./types.js";

export type ViewMode = "evdiff" | "p_swing" | "p_strike" | "p_contact";

export interface ExplorerState {
  game: GameStateFields;
  batterId: string;
  pitcherId: string;
  batterHand: "L" | "R";
  pitcherHand: "L" | "R";
  view: ViewMode;
  grid: { xMin: number; xMax: number; zMin: number; zMax: number; nx: number; nz: number };
  nDraws: number;
  seed: number;
  /** batter browser selection */
  browseBatter: string | null;
  browseSeason: number | null;
  outsFilter: number | null;
}

export const DEFAULT_STATE: ExplorerState = {
  game: {
    balls: 0,
    strikes: 0,
    outs: 0,
    on_first: false,
    on_second: false,
    on_third: false,
    score_diff: 0,
    inning: 1,
    top_inning: true,
  },
  batterId: "GENERIC",
  pitcherId: "GENERIC",
  batterHand: "R",
  pitcherHand: "R",
  view: "evdiff",
  grid: { xMin: -2, xMax: 2, zMin: 0.5, zMax: 4.5, nx: 41, nz: 41 },
  nDraws: 200,
  seed: 0,
  browseBatter: null,
  browseSeason: null,
  outsFilter: null,
};

const VIEWS: ViewMode[] = ["evdiff", "p_swing", "p_strike", "p_contact"];

export function encodeState(state: ExplorerState): string {
  const p = new URLSearchParams();
  const g = state.game;
  p.set("count", `${g.balls}-${g.strikes}`);
  p.set("outs", String(g.outs));
  const bases =
    (g.on_first ? 1 : 0) | (g.on_second ? 2 : 0) | (g.on_third ? 4 : 0);
  p.set("bases", String(bases));
  p.set("diff", String(g.score_diff));
  p.set("inn", `${g.inning}${g.top_inning ? "T" : "B"}`);
  p.set("bat", state.batterId);
  p.set("pit", state.pitcherId);
  p.set("hand", `${state.batterHand}${state.pitcherHand}`);
  p.set("view", state.view);
  const gr = state.grid;
  p.set("grid", [gr.xMin, gr.xMax, gr.zMin, gr.zMax, gr.nx, gr.nz].join(","));
  p.set("draws", String(state.nDraws));
  p.set("seed", String(state.seed));
  if (state.browseBatter !== null) p.set("browse", state.browseBatter);
  if (state.browseSeason !== null) p.set("season", String(state.browseSeason));
  if (state.outsFilter !== null) p.set("foc", String(state.outsFilter));
  return p.toString();
}

export function decodeState(fragment: string): ExplorerState {
  const p = new URLSearchParams(fragment.replace(/^#/, ""));
  const state: ExplorerState = structuredClone(DEFAULT_STATE);
  const count = p.get("count");
  if (count !== null) {
    const [balls, strikes] = count.split("-").map(Number);
    if (Number.isInteger(balls)) state.game.balls = balls;
    if (Number.isInteger(strikes)) state.game.strikes = strikes;
  }
  const outs = p.get("outs");
  if (outs !== null) state.game.outs = Number(outs);
  const bases = p.get("bases");
  if (bases !== null) {
    const mask = Number(bases);
    state.game.on_first = (mask & 1) !== 0;
    state.game.on_second = (mask & 2) !== 0;
    state.game.on_third = (mask & 4) !== 0;
  }
  const diff = p.get("diff");
  if (diff !== null) state.game.score_diff = Number(diff);
  const inn = p.get("inn");
  if (inn !== null) {
    state.game.inning = parseInt(inn, 10);
    state.game.top_inning = inn.endsWith("T");
  }
  state.batterId = p.get("bat") ?? state.batterId;
  state.pitcherId = p.get("pit") ?? state.pitcherId;
  const hand = p.get("hand");
  if (hand !== null && hand.length === 2) {
    state.batterHand = hand[0] === "L" ? "L" : "R";
    state.pitcherHand = hand[1] === "L" ? "L" : "R";
  }
  const view = p.get("view");
  if (view !== null && (VIEWS as string[]).includes(view)) {
    state.view = view as ViewMode;
  }
  const grid = p.get("grid");
  if (grid !== null) {
    const [xMin, xMax, zMin, zMax, nx, nz] = grid.split(",").map(Number);
    state.grid = { xMin, xMax, zMin, zMax, nx, nz };
  }
  const draws = p.get("draws");
  if (draws !== null) state.nDraws = Number(draws);
  const seed = p.get("seed");
  if (seed !== null) state.seed = Number(seed);
  state.browseBatter = p.get("browse");
  const season = p.get("season");
  state.browseSeason = season === null ? null : Number(season);
  const foc = p.get("foc");
  state.outsFilter = foc === null ? null : Number(foc);
  return state;
}

/** Request body for POST /whatif derived from the state. */
export function whatifRequest(state: ExplorerState): object {
  return {
    game_state: state.game,
    batter_id: state.batterId,
    pitcher_id: state.pitcherId,
    batter_hand: state.batterHand,
    pitcher_hand: state.pitcherHand,
    grid: {
      x_min: state.grid.xMin,
      x_max: state.grid.xMax,
      z_min: state.grid.zMin,
      z_max: state.grid.zMax,
      nx: state.grid.nx,
      nz: state.grid.nz,
    },
    n_draws: state.nDraws,
    seed: state.seed,
  };
}
