import { describe, expect, it } from "vitest";

import { barsTotal, probabilityBars } from "../src/bars.js";

const CLASSES = ["Heart", "Brain", "Reproductive", "Digestive"];

describe("probabilityBars", () => {
  it("rounds to integer percents", () => {
    const bars = probabilityBars(CLASSES, [0.7, 0.1, 0.1, 0.1]);
    expect(bars.map((bar) => bar.percent)).toEqual([70, 10, 10, 10]);
  });

  it("keeps equal quarters equal", () => {
    const bars = probabilityBars(CLASSES, [0.25, 0.25, 0.25, 0.25]);
    expect(bars.every((bar) => bar.percent === 25)).toBe(true);
  });

  it("sums to 100 within 2 for random distributions", () => {
    let seed = 12345;
    const random = () => {
      // deterministic LCG so failures reproduce
      seed = (seed * 1103515245 + 12345) % 2147483648;
      return seed / 2147483648;
    };
    for (let trial = 0; trial < 500; trial++) {
      const raw = CLASSES.map(() => random() + 1e-9);
      const total = raw.reduce((a, b) => a + b, 0);
      const probabilities = raw.map((value) => value / total);
      const bars = probabilityBars(CLASSES, probabilities);
      expect(Math.abs(barsTotal(bars) - 100)).toBeLessThanOrEqual(2);
    }
  });

  it("labels stay aligned with the class order", () => {
    const bars = probabilityBars(CLASSES, [0.1, 0.2, 0.3, 0.4]);
    expect(bars.map((bar) => bar.label)).toEqual(CLASSES);
  });
});
