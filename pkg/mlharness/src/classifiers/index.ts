import { Rng, gaussian, mulberry32, randInt } from "../rng";
import { ClassificationTree, RegressionTree, TreeOptions } from "./tree";

/** Every model is a binary classifier over labels coded 0/1; `scores`
 * returns a class-1 score usable for ROC curves. */
export interface Classifier {
  readonly name: string;
  train(X: number[][], y: number[]): void;
  predict(X: number[][]): number[];
  scores(X: number[][]): number[];
}

// ---------------------------------------------------------------------------
// trees and ensembles

export class DecisionTree implements Classifier {
  readonly name = "DecisionTree";
  private tree: ClassificationTree;

  constructor(seed: number, public params: Record<string, number> = {}) {
    this.tree = new ClassificationTree({
      maxDepth: params.maxDepth ?? 24,
      minSamplesLeaf: params.minSamplesLeaf ?? 1,
      featureSubsample: 0,
      randomThresholds: false,
      rng: mulberry32(seed),
    });
  }

  train(X: number[][], y: number[]): void {
    this.tree.train(X, y);
  }

  predict(X: number[][]): number[] {
    return X.map((x) => this.tree.predictOne(x));
  }

  scores(X: number[][]): number[] {
    return X.map((x) => this.tree.probOne(x));
  }
}

abstract class Forest implements Classifier {
  abstract readonly name: string;
  protected trees: ClassificationTree[] = [];
  protected nTrees: number;
  protected rng: Rng;

  constructor(seed: number, protected params: Record<string, number> = {}) {
    this.nTrees = params.nTrees ?? 60;
    this.rng = mulberry32(seed);
  }

  protected abstract sampleRows(n: number): number[];
  protected abstract treeOptions(nFeatures: number): TreeOptions;

  train(X: number[][], y: number[]): void {
    this.trees = [];
    for (let t = 0; t < this.nTrees; t++) {
      const idx = this.sampleRows(X.length);
      const tree = new ClassificationTree(this.treeOptions(X[0].length));
      tree.train(idx.map((i) => X[i]), idx.map((i) => y[i]));
      this.trees.push(tree);
    }
  }

  scores(X: number[][]): number[] {
    return X.map(
      (x) => this.trees.reduce((a, t) => a + t.predictOne(x), 0) / this.trees.length
    );
  }

  predict(X: number[][]): number[] {
    return this.scores(X).map((s) => (s >= 0.5 ? 1 : 0));
  }
}

export class RandomForest extends Forest {
  readonly name = "RandomForest";

  protected sampleRows(n: number): number[] {
    return Array.from({ length: n }, () => randInt(this.rng, n));
  }

  protected treeOptions(nFeatures: number): TreeOptions {
    return {
      maxDepth: this.params.maxDepth ?? 24,
      minSamplesLeaf: this.params.minSamplesLeaf ?? 1,
      featureSubsample: Math.max(1, Math.round(Math.sqrt(nFeatures))),
      randomThresholds: false,
      rng: this.rng,
    };
  }
}

export class ExtraTrees extends Forest {
  readonly name = "ExtraTrees";

  protected sampleRows(n: number): number[] {
    return Array.from({ length: n }, (_, i) => i);
  }

  protected treeOptions(nFeatures: number): TreeOptions {
    return {
      maxDepth: this.params.maxDepth ?? 24,
      minSamplesLeaf: this.params.minSamplesLeaf ?? 1,
      featureSubsample: Math.max(1, Math.round(Math.sqrt(nFeatures))),
      randomThresholds: true,
      rng: this.rng,
    };
  }
}

class Boosting implements Classifier {
  readonly name: string;
  private trees: RegressionTree[] = [];
  private base = 0;
  private lr: number;
  private rounds: number;
  private depth: number;
  private colSubsample: number;
  private l2: number;
  private rng: Rng;
  private cols: number[][] = [];

  constructor(
    name: string,
    seed: number,
    params: Record<string, number>,
    defaults: { rounds: number; lr: number; depth: number; colSubsample: number; l2: number }
  ) {
    this.name = name;
    this.lr = params.lr ?? defaults.lr;
    this.rounds = params.rounds ?? defaults.rounds;
    this.depth = params.maxDepth ?? defaults.depth;
    this.colSubsample = params.colSubsample ?? defaults.colSubsample;
    this.l2 = params.l2 ?? defaults.l2;
    this.rng = mulberry32(seed);
  }

  train(X: number[][], y: number[]): void {
    const n = X.length;
    const nf = X[0].length;
    const pos = y.reduce((a, b) => a + b, 0);
    const p0 = Math.min(Math.max(pos / n, 1e-6), 1 - 1e-6);
    this.base = Math.log(p0 / (1 - p0));
    const margin = new Array(n).fill(this.base);
    this.trees = [];
    this.cols = [];
    for (let r = 0; r < this.rounds; r++) {
      // negative gradient of logistic loss
      const grad = margin.map((m, i) => y[i] - 1 / (1 + Math.exp(-m)));
      let cols: number[];
      if (this.colSubsample < 1) {
        const want = Math.max(1, Math.round(nf * this.colSubsample));
        const picked = new Set<number>();
        while (picked.size < want) picked.add(randInt(this.rng, nf));
        cols = [...picked].sort((a, b) => a - b);
      } else {
        cols = Array.from({ length: nf }, (_, i) => i);
      }
      const Xsub = X.map((row) => cols.map((c) => row[c]));
      const tree = new RegressionTree({
        maxDepth: this.depth,
        minSamplesLeaf: 2,
        featureSubsample: 0,
        randomThresholds: false,
        rng: this.rng,
      });
      const shrink = 1 / (1 + this.l2);
      tree.train(Xsub, grad);
      for (let i = 0; i < n; i++) {
        margin[i] += this.lr * shrink * tree.predictOne(Xsub[i]);
      }
      this.trees.push(tree);
      this.cols.push(cols);
    }
    this.shrink = 1 / (1 + this.l2);
  }

  private shrink = 1;

  private marginOf(x: number[]): number {
    let m = this.base;
    for (let t = 0; t < this.trees.length; t++) {
      const sub = this.cols[t].map((c) => x[c]);
      m += this.lr * this.shrink * this.trees[t].predictOne(sub);
    }
    return m;
  }

  scores(X: number[][]): number[] {
    return X.map((x) => 1 / (1 + Math.exp(-this.marginOf(x))));
  }

  predict(X: number[][]): number[] {
    return this.scores(X).map((s) => (s >= 0.5 ? 1 : 0));
  }
}

export function gradientBoosting(seed: number, params: Record<string, number> = {}): Classifier {
  return new Boosting("GradientBoosting", seed, params, {
    rounds: 100,
    lr: 0.1,
    depth: 3,
    colSubsample: 1,
    l2: 0,
  });
}

export function boostedTrees(seed: number, params: Record<string, number> = {}): Classifier {
  return new Boosting("BoostedTrees", seed, params, {
    rounds: 100,
    lr: 0.3,
    depth: 6,
    colSubsample: 0.8,
    l2: 1,
  });
}

// ---------------------------------------------------------------------------
// linear models

function standardize(X: number[][]): { Xs: number[][]; mu: number[]; sd: number[] } {
  const nf = X[0].length;
  const mu = new Array(nf).fill(0);
  const sd = new Array(nf).fill(0);
  for (const row of X) row.forEach((v, j) => (mu[j] += v));
  mu.forEach((v, j) => (mu[j] = v / X.length));
  for (const row of X) row.forEach((v, j) => (sd[j] += (v - mu[j]) ** 2));
  sd.forEach((v, j) => (sd[j] = Math.sqrt(v / X.length) || 1));
  const Xs = X.map((row) => row.map((v, j) => (v - mu[j]) / sd[j]));
  return { Xs, mu, sd };
}

export class LogisticRegression implements Classifier {
  readonly name: string = "LogisticRegression";
  protected w: number[] = [];
  protected b = 0;
  protected mu: number[] = [];
  protected sd: number[] = [];
  protected maxIter: number;
  protected lr: number;

  constructor(seed: number, params: Record<string, number> = {}) {
    this.maxIter = params.maxIter ?? 10000;
    this.lr = params.lr ?? 0.1;
  }

  train(X: number[][], y: number[]): void {
    const { Xs, mu, sd } = standardize(X);
    this.mu = mu;
    this.sd = sd;
    const n = Xs.length;
    const nf = Xs[0].length;
    this.w = new Array(nf).fill(0);
    this.b = 0;
    for (let it = 0; it < this.maxIter; it++) {
      const gw = new Array(nf).fill(0);
      let gb = 0;
      for (let i = 0; i < n; i++) {
        let z = this.b;
        const row = Xs[i];
        for (let j = 0; j < nf; j++) z += this.w[j] * row[j];
        const err = 1 / (1 + Math.exp(-z)) - y[i];
        for (let j = 0; j < nf; j++) gw[j] += err * row[j];
        gb += err;
      }
      let shift = 0;
      for (let j = 0; j < nf; j++) {
        const step = (this.lr * gw[j]) / n;
        this.w[j] -= step;
        shift = Math.max(shift, Math.abs(step));
      }
      this.b -= (this.lr * gb) / n;
      if (shift < 1e-7) break;
    }
  }

  protected margin(x: number[]): number {
    let z = this.b;
    for (let j = 0; j < x.length; j++) z += (this.w[j] * (x[j] - this.mu[j])) / this.sd[j];
    return z;
  }

  scores(X: number[][]): number[] {
    return X.map((x) => 1 / (1 + Math.exp(-this.margin(x))));
  }

  predict(X: number[][]): number[] {
    return this.scores(X).map((s) => (s >= 0.5 ? 1 : 0));
  }
}

export class SgdClassifier implements Classifier {
  readonly name = "StochasticGradientDescent";
  private w: number[] = [];
  private b = 0;
  private mu: number[] = [];
  private sd: number[] = [];
  private epochs: number;
  private alpha: number;
  private rng: Rng;

  constructor(seed: number, params: Record<string, number> = {}) {
    this.epochs = params.epochs ?? 60;
    this.alpha = params.alpha ?? 1e-4;
    this.rng = mulberry32(seed);
  }

  train(X: number[][], y: number[]): void {
    const { Xs, mu, sd } = standardize(X);
    this.mu = mu;
    this.sd = sd;
    const n = Xs.length;
    const nf = Xs[0].length;
    this.w = new Array(nf).fill(0);
    this.b = 0;
    let t = 1;
    for (let e = 0; e < this.epochs; e++) {
      const order = Array.from({ length: n }, (_, i) => i);
      for (let i = order.length - 1; i > 0; i--) {
        const j = randInt(this.rng, i + 1);
        [order[i], order[j]] = [order[j], order[i]];
      }
      for (const i of order) {
        const eta = 1 / (this.alpha * (1000 + t));
        t++;
        let z = this.b;
        const row = Xs[i];
        for (let j = 0; j < nf; j++) z += this.w[j] * row[j];
        const err = 1 / (1 + Math.exp(-z)) - y[i];
        for (let j = 0; j < nf; j++) {
          this.w[j] -= eta * (err * row[j] + this.alpha * this.w[j]);
        }
        this.b -= eta * err;
      }
    }
  }

  private margin(x: number[]): number {
    let z = this.b;
    for (let j = 0; j < x.length; j++) z += (this.w[j] * (x[j] - this.mu[j])) / this.sd[j];
    return z;
  }

  scores(X: number[][]): number[] {
    return X.map((x) => 1 / (1 + Math.exp(-this.margin(x))));
  }

  predict(X: number[][]): number[] {
    return this.scores(X).map((s) => (s >= 0.5 ? 1 : 0));
  }
}

/** Linear SVM trained with the pegasos-style subgradient method. */
export class SupportVectorMachine implements Classifier {
  readonly name = "SupportVectorMachine";
  private w: number[] = [];
  private b = 0;
  private mu: number[] = [];
  private sd: number[] = [];
  private epochs: number;
  private lambda: number;
  private rng: Rng;

  constructor(seed: number, params: Record<string, number> = {}) {
    this.epochs = params.epochs ?? 80;
    this.lambda = params.lambda ?? 1e-3;
    this.rng = mulberry32(seed);
  }

  train(X: number[][], y: number[]): void {
    const { Xs, mu, sd } = standardize(X);
    this.mu = mu;
    this.sd = sd;
    const n = Xs.length;
    const nf = Xs[0].length;
    this.w = new Array(nf).fill(0);
    this.b = 0;
    let t = 1;
    for (let e = 0; e < this.epochs; e++) {
      for (let s = 0; s < n; s++) {
        const i = randInt(this.rng, n);
        const eta = 1 / (this.lambda * t);
        t++;
        const row = Xs[i];
        const target = y[i] === 1 ? 1 : -1;
        let z = this.b;
        for (let j = 0; j < nf; j++) z += this.w[j] * row[j];
        for (let j = 0; j < nf; j++) this.w[j] *= 1 - eta * this.lambda;
        if (target * z < 1) {
          for (let j = 0; j < nf; j++) this.w[j] += eta * target * row[j];
          this.b += eta * target * 0.01;
        }
      }
    }
  }

  private margin(x: number[]): number {
    let z = this.b;
    for (let j = 0; j < x.length; j++) z += (this.w[j] * (x[j] - this.mu[j])) / this.sd[j];
    return z;
  }

  scores(X: number[][]): number[] {
    return X.map((x) => this.margin(x));
  }

  predict(X: number[][]): number[] {
    return X.map((x) => (this.margin(x) >= 0 ? 1 : 0));
  }
}

// ---------------------------------------------------------------------------
// naive bayes / knn / neural network

export class GaussianNaiveBayes implements Classifier {
  readonly name = "GaussianNaiveBayes";
  private stats: { prior: number; mu: number[]; var_: number[] }[] = [];

  constructor(_seed: number, _params: Record<string, number> = {}) {}

  train(X: number[][], y: number[]): void {
    this.stats = [];
    for (const cls of [0, 1]) {
      const rows = X.filter((_, i) => y[i] === cls);
      const nf = X[0].length;
      const mu = new Array(nf).fill(0);
      const var_ = new Array(nf).fill(0);
      for (const r of rows) r.forEach((v, j) => (mu[j] += v));
      mu.forEach((v, j) => (mu[j] = rows.length ? v / rows.length : 0));
      for (const r of rows) r.forEach((v, j) => (var_[j] += (v - mu[j]) ** 2));
      var_.forEach((v, j) => (var_[j] = (rows.length ? v / rows.length : 1) + 1e-6));
      this.stats.push({ prior: rows.length / X.length, mu, var_ });
    }
  }

  private logLik(x: number[], cls: number): number {
    const { prior, mu, var_ } = this.stats[cls];
    let ll = Math.log(prior || 1e-12);
    for (let j = 0; j < x.length; j++) {
      ll += -0.5 * Math.log(2 * Math.PI * var_[j]) - ((x[j] - mu[j]) ** 2) / (2 * var_[j]);
    }
    return ll;
  }

  scores(X: number[][]): number[] {
    return X.map((x) => {
      const l0 = this.logLik(x, 0);
      const l1 = this.logLik(x, 1);
      const m = Math.max(l0, l1);
      const p1 = Math.exp(l1 - m) / (Math.exp(l0 - m) + Math.exp(l1 - m));
      return p1;
    });
  }

  predict(X: number[][]): number[] {
    return this.scores(X).map((s) => (s >= 0.5 ? 1 : 0));
  }
}

export class KNearestNeighbors implements Classifier {
  readonly name = "KNearestNeighbors";
  private X: number[][] = [];
  private y: number[] = [];
  private k: number;

  constructor(_seed: number, params: Record<string, number> = {}) {
    this.k = params.k ?? 5;
  }

  train(X: number[][], y: number[]): void {
    this.X = X;
    this.y = y;
  }

  scores(X: number[][]): number[] {
    return X.map((x) => {
      const d = this.X.map((r, i) => ({
        d: r.reduce((a, v, j) => a + (v - x[j]) * (v - x[j]), 0),
        y: this.y[i],
      }));
      d.sort((a, b) => a.d - b.d);
      const top = d.slice(0, this.k);
      return top.reduce((a, t) => a + t.y, 0) / top.length;
    });
  }

  predict(X: number[][]): number[] {
    return this.scores(X).map((s) => (s >= 0.5 ? 1 : 0));
  }
}

/** Feed-forward network, ReLU hidden layers, Adam, logistic output. */
export class NeuralNetwork implements Classifier {
  readonly name = "NeuralNetwork";
  private sizes: number[] = [];
  private W: Float64Array[] = [];
  private B: Float64Array[] = [];
  private mu: number[] = [];
  private sd: number[] = [];
  private maxIter: number;
  private hidden: number[];
  private lr: number;
  private batch: number;
  private seed: number;

  constructor(seed: number, params: Record<string, number> = {}) {
    this.maxIter = params.maxIter ?? 500;
    const width = params.hiddenWidth ?? 100;
    const depth = params.hiddenDepth ?? 3;
    this.hidden = new Array(depth).fill(width);
    this.lr = params.lr ?? 1e-3;
    this.batch = params.batch ?? 32;
    this.seed = seed;
  }

  train(X: number[][], y: number[]): void {
    const { Xs, mu, sd } = standardize(X);
    this.mu = mu;
    this.sd = sd;
    const rng = mulberry32(this.seed);
    const nf = Xs[0].length;
    this.sizes = [nf, ...this.hidden, 1];
    this.W = [];
    this.B = [];
    for (let l = 0; l < this.sizes.length - 1; l++) {
      const fanIn = this.sizes[l];
      const w = new Float64Array(this.sizes[l] * this.sizes[l + 1]);
      for (let i = 0; i < w.length; i++) w[i] = (gaussian(rng) * Math.sqrt(2 / fanIn)) as number;
      this.W.push(w);
      this.B.push(new Float64Array(this.sizes[l + 1]));
    }
    const mW = this.W.map((w) => new Float64Array(w.length));
    const vW = this.W.map((w) => new Float64Array(w.length));
    const mB = this.B.map((b) => new Float64Array(b.length));
    const vB = this.B.map((b) => new Float64Array(b.length));
    const b1 = 0.9;
    const b2 = 0.999;
    let step = 0;
    const n = Xs.length;
    for (let epoch = 0; epoch < this.maxIter; epoch++) {
      const order = Array.from({ length: n }, (_, i) => i);
      for (let i = order.length - 1; i > 0; i--) {
        const j = randInt(rng, i + 1);
        [order[i], order[j]] = [order[j], order[i]];
      }
      for (let start = 0; start < n; start += this.batch) {
        const batch = order.slice(start, start + this.batch);
        const gW = this.W.map((w) => new Float64Array(w.length));
        const gB = this.B.map((b) => new Float64Array(b.length));
        for (const i of batch) {
          this.backprop(Xs[i], y[i], gW, gB);
        }
        step++;
        const corr1 = 1 - Math.pow(b1, step);
        const corr2 = 1 - Math.pow(b2, step);
        for (let l = 0; l < this.W.length; l++) {
          const w = this.W[l];
          for (let k = 0; k < w.length; k++) {
            const g = gW[l][k] / batch.length;
            mW[l][k] = b1 * mW[l][k] + (1 - b1) * g;
            vW[l][k] = b2 * vW[l][k] + (1 - b2) * g * g;
            w[k] -= (this.lr * (mW[l][k] / corr1)) / (Math.sqrt(vW[l][k] / corr2) + 1e-8);
          }
          const b = this.B[l];
          for (let k = 0; k < b.length; k++) {
            const g = gB[l][k] / batch.length;
            mB[l][k] = b1 * mB[l][k] + (1 - b1) * g;
            vB[l][k] = b2 * vB[l][k] + (1 - b2) * g * g;
            b[k] -= (this.lr * (mB[l][k] / corr1)) / (Math.sqrt(vB[l][k] / corr2) + 1e-8);
          }
        }
      }
    }
  }

  private forward(x: number[]): { acts: Float64Array[]; out: number } {
    const acts: Float64Array[] = [Float64Array.from(x)];
    for (let l = 0; l < this.W.length; l++) {
      const inp = acts[l];
      const out = new Float64Array(this.sizes[l + 1]);
      const w = this.W[l];
      const b = this.B[l];
      const nIn = this.sizes[l];
      for (let o = 0; o < out.length; o++) {
        let z = b[o];
        const base = o * nIn;
        for (let i = 0; i < nIn; i++) z += w[base + i] * inp[i];
        out[o] = l < this.W.length - 1 ? (z > 0 ? z : 0) : z;
      }
      acts.push(out);
    }
    const z = acts[acts.length - 1][0];
    return { acts, out: 1 / (1 + Math.exp(-z)) };
  }

  private backprop(x: number[], target: number, gW: Float64Array[], gB: Float64Array[]): void {
    const { acts, out } = this.forward(x);
    let delta = new Float64Array([out - target]);
    for (let l = this.W.length - 1; l >= 0; l--) {
      const inp = acts[l];
      const nIn = this.sizes[l];
      const w = this.W[l];
      for (let o = 0; o < delta.length; o++) {
        gB[l][o] += delta[o];
        const base = o * nIn;
        for (let i = 0; i < nIn; i++) gW[l][base + i] += delta[o] * inp[i];
      }
      if (l > 0) {
        const prev = new Float64Array(nIn);
        for (let i = 0; i < nIn; i++) {
          if (acts[l][i] <= 0) continue;  // ReLU gate
          let s = 0;
          for (let o = 0; o < delta.length; o++) s += this.W[l][o * nIn + i] * delta[o];
          prev[i] = s;
        }
        delta = prev;
      }
    }
  }

  scores(X: number[][]): number[] {
    return X.map((x) => {
      const xs = x.map((v, j) => (v - this.mu[j]) / this.sd[j]);
      return this.forward(xs).out;
    });
  }

  predict(X: number[][]): number[] {
    return this.scores(X).map((s) => (s >= 0.5 ? 1 : 0));
  }
}

// ---------------------------------------------------------------------------

export type ClassifierFactory = (seed: number, params?: Record<string, number>) => Classifier;

export const ZOO: Record<string, ClassifierFactory> = {
  RandomForest: (s, p) => new RandomForest(s, p),
  DecisionTree: (s, p) => new DecisionTree(s, p),
  ExtraTrees: (s, p) => new ExtraTrees(s, p),
  LogisticRegression: (s, p) => new LogisticRegression(s, p),
  StochasticGradientDescent: (s, p) => new SgdClassifier(s, p),
  GradientBoosting: (s, p) => gradientBoosting(s, p),
  BoostedTrees: (s, p) => boostedTrees(s, p),
  GaussianNaiveBayes: (s, p) => new GaussianNaiveBayes(s, p),
  NeuralNetwork: (s, p) => new NeuralNetwork(s, p),
  SupportVectorMachine: (s, p) => new SupportVectorMachine(s, p),
  KNearestNeighbors: (s, p) => new KNearestNeighbors(s, p),
};

export function makeClassifier(
  name: string,
  seed: number,
  params: Record<string, number> = {}
): Classifier {
  const factory = ZOO[name];
  if (!factory) throw new Error(`unknown classifier ${name}`);
  return factory(seed, params);
}
