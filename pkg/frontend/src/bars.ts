/** Probability bars: integer percents per class. Four independent
 * roundings keep the displayed sum within 100 +- 2. */

export interface Bar {
  label: string;
  percent: number;
}

export function probabilityBars(classOrder: string[], probabilities: number[]): Bar[] {
  return classOrder.map((label, index) => ({
    label,
    percent: Math.round((probabilities[index] ?? 0) * 100),
  }));
}

export function barsTotal(bars: Bar[]): number {
  return bars.reduce((sum, bar) => sum + bar.percent, 0);
}
