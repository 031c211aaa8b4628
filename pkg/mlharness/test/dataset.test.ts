import * as path from "path";

import { describe, expect, it } from "vitest";

import { featurize, loadDataset, readCsv } from "../src/dataset";
import { distinctRotations, parseEntries, rotation, strandStats } from "../src/gauss";
import { ClassAbsent, TooManyCrossings } from "../src/types";

const FIXTURE = path.join(__dirname, "..", "fixtures", "dataset.csv");

describe("featurize", () => {
  it("pads the signed sequence to 2*cMax", () => {
    expect(featurize("-1 2 -3 1 -2 3", 4)).toEqual([-1, 2, -3, 1, -2, 3, 0, 0]);
  });

  it("empty code becomes the zero vector", () => {
    expect(featurize("", 3)).toEqual([0, 0, 0, 0, 0, 0]);
  });

  it("rejects codes beyond cMax", () => {
    expect(() => featurize("-1 2 -3 1 -2 3", 2)).toThrow(TooManyCrossings);
  });

  it("derived features append count, strands, overbridges, longest run", () => {
    const v = featurize("-1 2 -3 1 -2 3", 4, true);
    expect(v.slice(8)).toEqual([3, 3, 3, 1]);
  });
});

describe("rotations", () => {
  it("rotation relabels by first appearance", () => {
    expect(rotation([-1, 2, -3, 1, -2, 3], 1)).toEqual([1, -2, 3, -1, 2, -3]);
  });

  it("distinct rotations never repeat vectors", () => {
    const rots = distinctRotations(parseEntries("-1 2 -3 1 -2 3"));
    const keys = new Set(rots.map((r) => r.join(" ")));
    expect(keys.size).toBe(rots.length);
    expect(rots.length).toBeGreaterThan(1);
  });

  it("strand stats of the trefoil", () => {
    expect(strandStats(parseEntries("-1 2 -3 1 -2 3"))).toEqual({
      strands: 3,
      overbridges: 3,
      longest: 1,
    });
  });
});

describe("loadDataset", () => {
  it("loads exact rows for the configured classes", () => {
    const d = loadDataset(FIXTURE, { cMax: 16, classSet: [3, 4], exactOnly: true, derived: false });
    expect(d.rows.length).toBeGreaterThan(200);
    const labels = new Set(d.rows.map((r) => r.label));
    expect([...labels].sort()).toEqual([3, 4]);
    expect(d.rows[0].features.length).toBe(32);
  });

  it("raises ClassAbsent when a class has no rows", () => {
    expect(() =>
      loadDataset(FIXTURE, { cMax: 16, classSet: [3, 9], exactOnly: true, derived: false })
    ).toThrow(ClassAbsent);
  });

  it("readCsv recovers the header fields", () => {
    const rows = readCsv(FIXTURE);
    expect(Object.keys(rows[0])).toContain("b1_lower");
    expect(Object.keys(rows[0])).toContain("code");
  });
});
