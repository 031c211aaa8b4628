/** Classification metrics computed from scratch; everything is checked in
 * tests against hand-worked values. */

export function accuracy(yTrue: number[], yPred: number[]): number {
  let hit = 0;
  for (let i = 0; i < yTrue.length; i++) if (yTrue[i] === yPred[i]) hit++;
  return hit / yTrue.length;
}

/** counts[i][j] = rows with true class i predicted as class j. */
export function confusionMatrix(yTrue: number[], yPred: number[], classes: number[]): number[][] {
  const index = new Map(classes.map((c, i) => [c, i]));
  const m = classes.map(() => classes.map(() => 0));
  for (let i = 0; i < yTrue.length; i++) {
    const a = index.get(yTrue[i]);
    const b = index.get(yPred[i]);
    if (a !== undefined && b !== undefined) m[a][b] += 1;
  }
  return m;
}

export interface ClassScores {
  precision: number;
  recall: number;
  f1: number;
  support: number;
}

export function perClassScores(conf: number[][]): ClassScores[] {
  const k = conf.length;
  const out: ClassScores[] = [];
  for (let i = 0; i < k; i++) {
    const support = conf[i].reduce((a, b) => a + b, 0);
    const tp = conf[i][i];
    let predicted = 0;
    for (let j = 0; j < k; j++) predicted += conf[j][i];
    const precision = predicted === 0 ? 0 : tp / predicted;
    const recall = support === 0 ? 0 : tp / support;
    const f1 = precision + recall === 0 ? 0 : (2 * precision * recall) / (precision + recall);
    out.push({ precision, recall, f1, support });
  }
  return out;
}

/** Support-weighted mean of per-class F1 scores. */
export function weightedF1(conf: number[][]): number {
  const scores = perClassScores(conf);
  const total = scores.reduce((a, s) => a + s.support, 0);
  if (total === 0) return 0;
  return scores.reduce((a, s) => a + s.f1 * s.support, 0) / total;
}

/** ROC-AUC by the rank statistic; positives are label===positive. */
export function rocAuc(yTrue: number[], scores: number[], positive: number): number {
  const pairs = yTrue.map((y, i) => ({ y, s: scores[i] })).sort((a, b) => a.s - b.s);
  let rank = 1;
  let i = 0;
  let sumPosRanks = 0;
  let nPos = 0;
  let nNeg = 0;
  while (i < pairs.length) {
    let j = i;
    while (j < pairs.length && pairs[j].s === pairs[i].s) j++;
    const avgRank = (rank + (rank + (j - i) - 1)) / 2;
    for (let k = i; k < j; k++) {
      if (pairs[k].y === positive) {
        sumPosRanks += avgRank;
        nPos++;
      } else {
        nNeg++;
      }
    }
    rank += j - i;
    i = j;
  }
  if (nPos === 0 || nNeg === 0) return NaN;
  return (sumPosRanks - (nPos * (nPos + 1)) / 2) / (nPos * nNeg);
}

/** Points of the ROC curve, threshold-swept from high score to low. */
export function rocCurve(
  yTrue: number[],
  scores: number[],
  positive: number
): { fpr: number; tpr: number }[] {
  const order = yTrue.map((_, i) => i).sort((a, b) => scores[b] - scores[a]);
  const nPos = yTrue.filter((y) => y === positive).length;
  const nNeg = yTrue.length - nPos;
  const pts = [{ fpr: 0, tpr: 0 }];
  let tp = 0;
  let fp = 0;
  let i = 0;
  while (i < order.length) {
    const s = scores[order[i]];
    while (i < order.length && scores[order[i]] === s) {
      if (yTrue[order[i]] === positive) tp++;
      else fp++;
      i++;
    }
    pts.push({ fpr: nNeg ? fp / nNeg : 0, tpr: nPos ? tp / nPos : 0 });
  }
  return pts;
}

export function mean(xs: number[]): number {
  return xs.reduce((a, b) => a + b, 0) / xs.length;
}

export function std(xs: number[]): number {
  const m = mean(xs);
  return Math.sqrt(xs.reduce((a, b) => a + (b - m) * (b - m), 0) / xs.length);
}
