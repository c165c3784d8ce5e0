/** Payload shapes of the decision-engine API, mirrored verbatim. */

export interface GameStateFields {
  balls: number;
  strikes: number;
  outs: number;
  on_first: boolean;
  on_second: boolean;
  on_third: boolean;
  score_diff: number;
  inning: number;
  top_inning: boolean;
}

export interface ComponentMeans {
  p_strike: number;
  p_contact: number;
  xr_contact: number;
  xr_miss: number;
  xr_strike: number;
  xr_ball: number;
}

export interface WhatIfCell {
  x: number;
  z: number;
  mean_evdiff: number;
  lo: number;
  hi: number;
  p_swing_optimal: number;
  optimal: "swing" | "take";
  components: ComponentMeans;
}

export interface ZoneRect {
  half_width: number;
  bottom: number;
  top: number;
}

export interface WhatIfResponse {
  n_draws: number;
  seed: number;
  grid: { nx: number; nz: number };
  zone: ZoneRect;
  cells: WhatIfCell[];
}

export interface MetricSummary {
  mean: number;
  lo: number;
  hi: number;
}

export interface ScoredPitchRow {
  game_pk: string;
  at_bat_number: number;
  pitch_number: number;
  year: number;
  batter_id: string;
  plate_x: number;
  plate_z: number;
  balls: number;
  strikes: number;
  outs: number;
  on_first: boolean;
  on_second: boolean;
  on_third: boolean;
  sz_top: number | null;
  sz_bot: number | null;
  actual: "swing" | "take";
  mean_evdiff: number;
  lo: number;
  hi: number;
  p_swing_optimal: number;
  optimal: "swing" | "take";
  panel: "a" | "b" | "c" | "d" | null;
}

export interface BatterReportResponse {
  batter_id: string;
  season: number;
  n_pitches: number;
  qualified: boolean;
  min_pitches: number;
  proportion_optimal: MetricSummary;
  runs_added: MetricSummary;
  runs_lost: MetricSummary;
  runs_added_per_pitch: number;
  runs_lost_per_pitch: number;
  panel_counts: Record<string, number>;
  panel_sums: Record<string, number>;
  traditional: {
    correct_decision_pct: number;
    o_swing_pct: number | null;
    z_swing_pct: number | null;
  };
  proportion_optimal_draws: number[];
  runs_added_draws: number[];
  runs_lost_draws: number[];
  pitches: ScoredPitchRow[];
}

export interface BatterListEntry {
  batter_id: string;
  n_pitches: number;
  season: number;
}

export interface ApiErrorBody {
  error: { code: string; message: string };
}
