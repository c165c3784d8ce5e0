/** Five-number summaries for the per-batter posterior draw boxplots. */

export interface BoxStats {
  lo: number; // 5% draw quantile
  q1: number;
  median: number;
  q3: number;
  hi: number; // 95% draw quantile
  mean: number;
}

/** Order-statistic quantile (inverted CDF), matching the engine's summaries. */
export function drawQuantile(sorted: number[], q: number): number {
  const n = sorted.length;
  const rank = Math.max(1, Math.ceil(q * n));
  return sorted[rank - 1];
}

export function boxStats(draws: number[]): BoxStats {
  if (draws.length === 0) {
    throw new Error("boxStats needs at least one draw");
  }
  const sorted = [...draws].sort((a, b) => a - b);
  const mean = draws.reduce((acc, v) => acc + v, 0) / draws.length;
  return {
    lo: drawQuantile(sorted, 0.05),
    q1: drawQuantile(sorted, 0.25),
    median: drawQuantile(sorted, 0.5),
    q3: drawQuantile(sorted, 0.75),
    hi: drawQuantile(sorted, 0.95),
    mean,
  };
}
