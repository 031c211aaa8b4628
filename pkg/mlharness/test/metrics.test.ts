import { describe, expect, it } from "vitest";

import {
  accuracy,
  confusionMatrix,
  mean,
  perClassScores,
  rocAuc,
  rocCurve,
  std,
  weightedF1,
} from "../src/metrics";

describe("confusion-derived scores", () => {
  // hand-worked 3x3 oracle:
  //        pred a  b  c
  // true a      5  2  0   support 7
  // true b      1  6  1   support 8
  // true c      0  2  3   support 5
  const conf = [
    [5, 2, 0],
    [1, 6, 1],
    [0, 2, 3],
  ];

  it("per-class precision/recall/f1 match hand computation", () => {
    const s = perClassScores(conf);
    // class a: precision 5/6, recall 5/7
    expect(s[0].precision).toBeCloseTo(5 / 6, 12);
    expect(s[0].recall).toBeCloseTo(5 / 7, 12);
    expect(s[0].f1).toBeCloseTo((2 * (5 / 6) * (5 / 7)) / (5 / 6 + 5 / 7), 12);
    // class b: precision 6/10, recall 6/8
    expect(s[1].precision).toBeCloseTo(0.6, 12);
    expect(s[1].recall).toBeCloseTo(0.75, 12);
    // class c: precision 3/4, recall 3/5
    expect(s[2].precision).toBeCloseTo(0.75, 12);
    expect(s[2].recall).toBeCloseTo(0.6, 12);
  });

  it("weighted f1 equals the support-weighted mean of the class f1s", () => {
    const s = perClassScores(conf);
    const manual = (s[0].f1 * 7 + s[1].f1 * 8 + s[2].f1 * 5) / 20;
    expect(weightedF1(conf)).toBeCloseTo(manual, 12);
  });

  it("confusionMatrix counts by class list order", () => {
    const m = confusionMatrix([3, 3, 4, 4], [3, 4, 4, 4], [3, 4]);
    expect(m).toEqual([
      [1, 1],
      [0, 2],
    ]);
  });

  it("accuracy", () => {
    expect(accuracy([1, 0, 1, 1], [1, 1, 1, 0])).toBeCloseTo(0.5, 12);
  });
});

describe("roc", () => {
  it("perfect separation gives auc 1, reversed gives 0", () => {
    const y = [0, 0, 1, 1];
    expect(rocAuc(y, [0.1, 0.2, 0.8, 0.9], 1)).toBe(1);
    expect(rocAuc(y, [0.9, 0.8, 0.2, 0.1], 1)).toBe(0);
  });

  it("ties average to one half", () => {
    expect(rocAuc([0, 1, 0, 1], [0.5, 0.5, 0.5, 0.5], 1)).toBeCloseTo(0.5, 12);
  });

  it("curve starts at the origin and ends at (1,1)", () => {
    const pts = rocCurve([0, 1, 0, 1], [0.3, 0.9, 0.6, 0.2], 1);
    expect(pts[0]).toEqual({ fpr: 0, tpr: 0 });
    expect(pts[pts.length - 1]).toEqual({ fpr: 1, tpr: 1 });
  });
});

describe("moments", () => {
  it("mean and population std", () => {
    expect(mean([1, 2, 3, 4])).toBe(2.5);
    expect(std([2, 4, 4, 4, 5, 5, 7, 9])).toBeCloseTo(2, 12);
  });
});
