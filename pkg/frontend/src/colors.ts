/**
 * Color scales. The swing-edge scale diverges around zero (blue = take,
 * red = swing); probabilities use a sequential scale on [0, 1]. No numeric
 * post-processing happens here beyond mapping a value to a color.
 */

export interface Rgb {
  r: number;
  g: number;
  b: number;
}

function lerp(a: number, b: number, t: number): number {
  return a + (b - a) * t;
}

function mix(a: Rgb, b: Rgb, t: number): Rgb {
  return { r: lerp(a.r, b.r, t), g: lerp(a.g, b.g, t), b: lerp(a.b, b.b, t) };
}

const TAKE_BLUE: Rgb = { r: 33, g: 102, b: 172 };
const NEUTRAL: Rgb = { r: 247, g: 247, b: 247 };
const SWING_RED: Rgb = { r: 178, g: 24, b: 43 };
const LOW: Rgb = { r: 255, g: 255, b: 229 };
const HIGH: Rgb = { r: 0, g: 69, b: 41 };

/** Symmetric about 0: -limit maps to full blue, +limit to full red. */
export function divergingColor(value: number, limit: number): Rgb {
  if (limit <= 0) return NEUTRAL;
  const t = Math.max(-1, Math.min(1, value / limit));
  return t < 0 ? mix(NEUTRAL, TAKE_BLUE, -t) : mix(NEUTRAL, SWING_RED, t);
}

/** Sequential on [0, 1]. */
export function sequentialColor(value: number): Rgb {
  const t = Math.max(0, Math.min(1, value));
  return mix(LOW, HIGH, t);
}

export function css(color: Rgb): string {
  const c = (v: number) => Math.round(v);
  return `rgb(${c(color.r)}, ${c(color.g)}, ${c(color.b)})`;
}
