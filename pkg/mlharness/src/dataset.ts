import * as fs from "fs";

import { parseEntries, strandStats } from "./gauss";
import { ClassAbsent, Dataset, DatasetMissing, FeatureRow, TooManyCrossings } from "./types";

/** Tiny CSV reader: handles quoted fields, which is all the pipeline emits. */
export function readCsv(path: string): Record<string, string>[] {
  if (!fs.existsSync(path)) throw new DatasetMissing(`no dataset at ${path}`);
  const text = fs.readFileSync(path, "utf-8");
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length === 0) throw new DatasetMissing(`${path} is empty`);
  const parseLine = (line: string): string[] => {
    const out: string[] = [];
    let cur = "";
    let quoted = false;
    for (let i = 0; i < line.length; i++) {
      const ch = line[i];
      if (quoted) {
        if (ch === '"' && line[i + 1] === '"') {
          cur += '"';
          i++;
        } else if (ch === '"') {
          quoted = false;
        } else {
          cur += ch;
        }
      } else if (ch === '"') {
        quoted = true;
      } else if (ch === ",") {
        out.push(cur);
        cur = "";
      } else {
        cur += ch;
      }
    }
    out.push(cur);
    return out;
  };
  const header = parseLine(lines[0]);
  return lines.slice(1).map((l) => {
    const cells = parseLine(l);
    const row: Record<string, string> = {};
    header.forEach((h, i) => (row[h] = cells[i] ?? ""));
    return row;
  });
}

/** Pad the signed entry sequence to a fixed-length integer vector. */
export function featurize(code: string, cMax: number, derived = false): number[] {
  const entries = parseEntries(code);
  if (entries.length > 2 * cMax) {
    throw new TooManyCrossings(`${entries.length / 2} crossings exceeds cMax=${cMax}`);
  }
  const vec = entries.concat(new Array(2 * cMax - entries.length).fill(0));
  if (!derived) return vec;
  const stats = strandStats(entries);
  return vec.concat([entries.length / 2, stats.strands, stats.overbridges, stats.longest]);
}

export interface LoadOptions {
  cMax: number;
  classSet: number[];
  exactOnly: boolean;
  derived: boolean;
}

/** Read the pipeline CSV into labeled feature rows (label = exact b1). */
export function loadDataset(path: string, opt: LoadOptions): Dataset {
  const rows = readCsv(path);
  const out: FeatureRow[] = [];
  for (const row of rows) {
    if (opt.exactOnly && row["b1_exact"] !== "1") continue;
    const label = parseInt(row["b1_lower"], 10);
    if (!Number.isFinite(label) || !opt.classSet.includes(label)) continue;
    out.push({
      features: featurize(row["code"], opt.cMax, opt.derived),
      label,
      code: row["code"],
    });
  }
  const present = new Set(out.map((r) => r.label));
  for (const cls of opt.classSet) {
    if (!present.has(cls)) {
      throw new ClassAbsent(`class ${cls} has no rows in ${path}`);
    }
  }
  return { rows: out, cMax: opt.cMax, classes: opt.classSet.slice() };
}
