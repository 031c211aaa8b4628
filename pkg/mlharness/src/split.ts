import { Rng, shuffle } from "./rng";
import { FeatureRow } from "./types";

/** Stratified split: per-class proportions in the test set stay within one
 * row of the global ratio. */
export function stratifiedSplit(
  rows: FeatureRow[],
  trainRatio: number,
  rng: Rng
): { train: FeatureRow[]; test: FeatureRow[] } {
  const byClass = new Map<number, FeatureRow[]>();
  for (const r of rows) {
    if (!byClass.has(r.label)) byClass.set(r.label, []);
    byClass.get(r.label)!.push(r);
  }
  const train: FeatureRow[] = [];
  const test: FeatureRow[] = [];
  for (const [, members] of [...byClass.entries()].sort((a, b) => a[0] - b[0])) {
    const mixed = shuffle(rng, members);
    const nTrain = Math.round(mixed.length * trainRatio);
    train.push(...mixed.slice(0, nTrain));
    test.push(...mixed.slice(nTrain));
  }
  return { train: shuffle(rng, train), test: shuffle(rng, test) };
}

/** Stratified k folds covering every row exactly once. */
export function stratifiedFolds(rows: FeatureRow[], k: number, rng: Rng): FeatureRow[][] {
  const folds: FeatureRow[][] = Array.from({ length: k }, () => []);
  const byClass = new Map<number, FeatureRow[]>();
  for (const r of rows) {
    if (!byClass.has(r.label)) byClass.set(r.label, []);
    byClass.get(r.label)!.push(r);
  }
  for (const [, members] of [...byClass.entries()].sort((a, b) => a[0] - b[0])) {
    shuffle(rng, members).forEach((r, i) => folds[i % k].push(r));
  }
  return folds;
}
