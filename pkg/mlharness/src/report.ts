import * as fs from "fs";
import * as path from "path";

interface Metrics {
  comparison: { model: string; trainAccuracy: number; testAccuracy: number; weightedF1: number }[];
  crossValidation: { metric: string; mean: number; std: number }[];
  samplingComparison: {
    sampling: string;
    trainAccuracy: number;
    testAccuracy: number;
    weightedF1: number;
  }[];
  confusion: number[][];
  auc: number;
}

function pad(s: string, n: number): string {
  return s.length >= n ? s : s + " ".repeat(n - s.length);
}

export function renderReport(dir: string): string {
  const metricsPath = path.join(dir, "metrics.json");
  if (!fs.existsSync(metricsPath)) throw new Error(`no metrics.json under ${dir}`);
  const m: Metrics = JSON.parse(fs.readFileSync(metricsPath, "utf-8"));
  const lines: string[] = [];
  lines.push("model comparison (train/test split)");
  lines.push(pad("model", 28) + pad("train_acc", 12) + pad("test_acc", 12) + "weighted_f1");
  for (const r of m.comparison) {
    lines.push(
      pad(r.model, 28) +
        pad(r.trainAccuracy.toFixed(4), 12) +
        pad(r.testAccuracy.toFixed(4), 12) +
        r.weightedF1.toFixed(4)
    );
  }
  lines.push("");
  lines.push("cross-validation of the selected model");
  lines.push(pad("metric", 16) + pad("mean", 10) + "std");
  for (const r of m.crossValidation) {
    lines.push(pad(r.metric, 16) + pad(r.mean.toFixed(4), 10) + r.std.toFixed(4));
  }
  lines.push("");
  lines.push("sampling comparison (training set resampled)");
  lines.push(pad("sampling", 20) + pad("train_acc", 12) + pad("test_acc", 12) + "weighted_f1");
  for (const r of m.samplingComparison) {
    lines.push(
      pad(r.sampling, 20) +
        pad(r.trainAccuracy.toFixed(4), 12) +
        pad(r.testAccuracy.toFixed(4), 12) +
        r.weightedF1.toFixed(4)
    );
  }
  lines.push("");
  lines.push(`confusion matrix: ${JSON.stringify(m.confusion)}  ROC-AUC: ${m.auc.toFixed(4)}`);
  return lines.join("\n");
}
