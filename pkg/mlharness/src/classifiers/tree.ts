import { Rng, randInt } from "../rng";

/** CART-style binary trees over dense numeric features.  The same split
 * search serves the classifier (gini) and the regressor (variance) used
 * inside gradient boosting. */

export interface TreeOptions {
  maxDepth: number;
  minSamplesLeaf: number;
  /** features examined per split; 0 means all */
  featureSubsample: number;
  /** pick one random threshold per feature instead of scanning all */
  randomThresholds: boolean;
  rng?: Rng;
}

interface Node {
  feature: number;
  threshold: number;
  left: Node | Leaf;
  right: Node | Leaf;
}

interface Leaf {
  value: number;
  /** class-1 probability for classification leaves */
  prob: number;
}

function isLeaf(n: Node | Leaf): n is Leaf {
  return (n as Leaf).prob !== undefined;
}

function candidateFeatures(nFeatures: number, opt: TreeOptions): number[] {
  if (!opt.featureSubsample || opt.featureSubsample >= nFeatures) {
    return Array.from({ length: nFeatures }, (_, i) => i);
  }
  const rng = opt.rng!;
  const picked = new Set<number>();
  while (picked.size < opt.featureSubsample) picked.add(randInt(rng, nFeatures));
  return [...picked];
}

/** Generic grower: `impurity` scores a set of row indices, lower is purer. */
function grow(
  X: number[][],
  target: number[],
  idx: number[],
  depth: number,
  opt: TreeOptions,
  impurity: (idx: number[]) => number,
  leafOf: (idx: number[]) => Leaf
): Node | Leaf {
  if (depth >= opt.maxDepth || idx.length < 2 * opt.minSamplesLeaf) return leafOf(idx);
  const base = impurity(idx);
  if (base === 0) return leafOf(idx);
  let best: { f: number; t: number; gain: number; left: number[]; right: number[] } | null = null;
  for (const f of candidateFeatures(X[0].length, opt)) {
    const values = [...new Set(idx.map((i) => X[i][f]))].sort((a, b) => a - b);
    if (values.length < 2) continue;
    let thresholds: number[];
    if (opt.randomThresholds) {
      const lo = values[0];
      const hi = values[values.length - 1];
      thresholds = [lo + (opt.rng ? opt.rng() : 0.5) * (hi - lo)];
    } else {
      thresholds = values.slice(0, -1).map((v, i) => (v + values[i + 1]) / 2);
    }
    for (const t of thresholds) {
      const left = idx.filter((i) => X[i][f] <= t);
      if (left.length < opt.minSamplesLeaf || idx.length - left.length < opt.minSamplesLeaf) continue;
      const right = idx.filter((i) => X[i][f] > t);
      const gain =
        base -
        (left.length / idx.length) * impurity(left) -
        (right.length / idx.length) * impurity(right);
      if (!best || gain > best.gain) best = { f, t, gain, left, right };
    }
  }
  if (!best || best.gain <= 1e-12) return leafOf(idx);
  return {
    feature: best.f,
    threshold: best.t,
    left: grow(X, target, best.left, depth + 1, opt, impurity, leafOf),
    right: grow(X, target, best.right, depth + 1, opt, impurity, leafOf),
  };
}

function descend(node: Node | Leaf, x: number[]): Leaf {
  while (!isLeaf(node)) {
    node = x[node.feature] <= node.threshold ? node.left : node.right;
  }
  return node;
}

/** Binary classifier on labels 0/1 with gini impurity. */
export class ClassificationTree {
  private root: Node | Leaf | null = null;

  constructor(private opt: TreeOptions) {}

  train(X: number[][], y: number[]): void {
    const idx = Array.from({ length: X.length }, (_, i) => i);
    const gini = (rows: number[]) => {
      let ones = 0;
      for (const i of rows) ones += y[i];
      const p = ones / rows.length;
      return 2 * p * (1 - p);
    };
    const leafOf = (rows: number[]) => {
      let ones = 0;
      for (const i of rows) ones += y[i];
      const p = ones / rows.length;
      return { value: p >= 0.5 ? 1 : 0, prob: p };
    };
    this.root = grow(X, y, idx, 0, this.opt, gini, leafOf);
  }

  predictOne(x: number[]): number {
    return descend(this.root!, x).value;
  }

  probOne(x: number[]): number {
    return descend(this.root!, x).prob;
  }
}

/** Regressor with variance impurity and mean leaves. */
export class RegressionTree {
  private root: Node | Leaf | null = null;

  constructor(private opt: TreeOptions) {}

  train(X: number[][], y: number[]): void {
    const idx = Array.from({ length: X.length }, (_, i) => i);
    const variance = (rows: number[]) => {
      let s = 0;
      let s2 = 0;
      for (const i of rows) {
        s += y[i];
        s2 += y[i] * y[i];
      }
      const m = s / rows.length;
      return Math.max(0, s2 / rows.length - m * m);
    };
    const leafOf = (rows: number[]) => {
      let s = 0;
      for (const i of rows) s += y[i];
      return { value: s / rows.length, prob: s / rows.length };
    };
    this.root = grow(X, y, idx, 0, this.opt, variance, leafOf);
  }

  predictOne(x: number[]): number {
    return descend(this.root!, x).value;
  }
}
