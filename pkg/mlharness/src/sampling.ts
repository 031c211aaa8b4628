import { featurize } from "./dataset";
import { distinctRotations, parseEntries } from "./gauss";
import { Rng, randInt, shuffle } from "./rng";
import { FeatureRow, SamplingStrategy } from "./types";

function byClass(rows: FeatureRow[]): Map<number, FeatureRow[]> {
  const m = new Map<number, FeatureRow[]>();
  for (const r of rows) {
    if (!m.has(r.label)) m.set(r.label, []);
    m.get(r.label)!.push(r);
  }
  return m;
}

export function undersample(rows: FeatureRow[], rng: Rng): FeatureRow[] {
  const groups = byClass(rows);
  const target = Math.min(...[...groups.values()].map((g) => g.length));
  const out: FeatureRow[] = [];
  for (const [, members] of [...groups.entries()].sort((a, b) => a[0] - b[0])) {
    out.push(...shuffle(rng, members).slice(0, target));
  }
  return shuffle(rng, out);
}

/** Interpolate between a row and one of its k nearest same-class neighbors.
 * Geometrically naive on integer code vectors, benchmarked anyway. */
export function smote(rows: FeatureRow[], rng: Rng, k = 5): FeatureRow[] {
  const groups = byClass(rows);
  const target = Math.max(...[...groups.values()].map((g) => g.length));
  const out = rows.slice();
  for (const [label, members] of [...groups.entries()].sort((a, b) => a[0] - b[0])) {
    let need = target - members.length;
    if (need <= 0) continue;
    const dist = (a: number[], b: number[]) =>
      a.reduce((acc, v, i) => acc + (v - b[i]) * (v - b[i]), 0);
    while (need > 0) {
      const base = members[randInt(rng, members.length)];
      const neighbors = members
        .filter((m) => m !== base)
        .map((m) => ({ m, d: dist(m.features, base.features) }))
        .sort((a, b) => a.d - b.d)
        .slice(0, k);
      const pick = neighbors.length
        ? neighbors[randInt(rng, neighbors.length)].m
        : base;
      const t = rng();
      const features = base.features.map((v, i) => v + t * (pick.features[i] - v));
      out.push({ features, label, code: base.code });
      need--;
    }
  }
  return shuffle(rng, out);
}

export interface OversampleLog {
  fallbacks: number;
  messages: string[];
}

/** Balance minority classes with distinct cyclic rotations of their codes;
 * rotations are the same knot, so labels stay valid.  Never duplicates a
 * vector already present; falls back to sampling with replacement (and
 * counts it) when a class runs out of fresh rotations. */
export function oversampleCyclic(
  rows: FeatureRow[],
  rng: Rng,
  cMax: number,
  derived = false,
  log?: OversampleLog
): FeatureRow[] {
  const groups = byClass(rows);
  const target = Math.max(...[...groups.values()].map((g) => g.length));
  const out = rows.slice();
  const seen = new Set(rows.map((r) => r.features.join(",")));
  for (const [label, members] of [...groups.entries()].sort((a, b) => a[0] - b[0])) {
    let need = target - members.length;
    if (need <= 0) continue;
    const fresh: FeatureRow[] = [];
    for (const base of members) {
      for (const rot of distinctRotations(parseEntries(base.code))) {
        const code = rot.join(" ");
        const features = featurize(code, cMax, derived);
        const key = features.join(",");
        if (!seen.has(key)) {
          seen.add(key);
          fresh.push({ features, label, code });
        }
      }
    }
    const picked = shuffle(rng, fresh).slice(0, need);
    out.push(...picked);
    need -= picked.length;
    if (need > 0) {
      if (log) {
        log.fallbacks += need;
        log.messages.push(
          `InsufficientRotations: class ${label} short ${need} rows, sampling with replacement`
        );
      }
      for (let i = 0; i < need; i++) {
        out.push(members[randInt(rng, members.length)]);
      }
    }
  }
  return shuffle(rng, out);
}

export function applySampling(
  strategy: SamplingStrategy,
  rows: FeatureRow[],
  rng: Rng,
  cMax: number,
  derived = false,
  log?: OversampleLog
): FeatureRow[] {
  switch (strategy) {
    case "none":
      return rows;
    case "undersample":
      return undersample(rows, rng);
    case "smote":
      return smote(rows, rng);
    case "cyclic-rotations":
      return oversampleCyclic(rows, rng, cMax, derived, log);
  }
}
