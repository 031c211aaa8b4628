/** Minimal Gauss-code handling: just enough to featurize dataset rows and
 * enumerate the cyclic rotations used for oversampling. */

export function parseEntries(code: string): number[] {
  const trimmed = code.trim();
  if (!trimmed) return [];
  return trimmed.split(/[\s,]+/).map((t) => {
    const v = parseInt(t, 10);
    if (!Number.isFinite(v) || v === 0) throw new Error(`bad entry ${t} in code "${code}"`);
    return v;
  });
}

/** Rename crossings 1..n by first appearance, keeping entry signs. */
export function relabel(entries: number[]): number[] {
  const map = new Map<number, number>();
  const out: number[] = [];
  for (const v of entries) {
    const a = Math.abs(v);
    if (!map.has(a)) map.set(a, map.size + 1);
    const m = map.get(a)!;
    out.push(v > 0 ? m : -m);
  }
  return out;
}

export function rotation(entries: number[], r: number): number[] {
  const m = entries.length;
  if (m === 0) return [];
  const rot = entries.slice(r % m).concat(entries.slice(0, r % m));
  return relabel(rot);
}

/** All distinct relabeled rotations of a code. */
export function distinctRotations(entries: number[]): number[][] {
  const seen = new Set<string>();
  const out: number[][] = [];
  for (let r = 0; r < Math.max(1, entries.length); r++) {
    const rot = rotation(entries, r);
    const key = rot.join(" ");
    if (!seen.has(key)) {
      seen.add(key);
      out.push(rot);
    }
  }
  return out;
}

/** Strand statistics for the optional derived feature set. */
export function strandStats(entries: number[]): { strands: number; overbridges: number; longest: number } {
  const m = entries.length;
  if (m === 0) return { strands: 0, overbridges: 0, longest: 0 };
  const negs: number[] = [];
  entries.forEach((v, i) => {
    if (v < 0) negs.push(i);
  });
  let overbridges = 0;
  let longest = 0;
  for (let i = 0; i < negs.length; i++) {
    const s = negs[i];
    const t = negs[(i + 1) % negs.length];
    let len = 0;
    let hasOver = false;
    for (let j = (s + 1) % m; j !== t; j = (j + 1) % m) {
      len += 1;
      if (entries[j] > 0) hasOver = true;
    }
    if (hasOver) overbridges += 1;
    longest = Math.max(longest, len);
  }
  return { strands: negs.length, overbridges, longest };
}
