import { execSync } from "child_process";
import * as fs from "fs";
import * as path from "path";

import { makeClassifier } from "./classifiers";
import { loadDataset } from "./dataset";
import { accuracy, confusionMatrix, mean, rocAuc, rocCurve, std, weightedF1 } from "./metrics";
import { confusionSvg, rocSvg } from "./plots";
import { OversampleLog, applySampling } from "./sampling";
import { mulberry32 } from "./rng";
import { stratifiedFolds, stratifiedSplit } from "./split";
import { ExperimentConfig, FeatureRow } from "./types";

export interface ModelRow {
  model: string;
  trainAccuracy: number;
  testAccuracy: number;
  weightedF1: number;
}

export interface CvRow {
  metric: string;
  mean: number;
  std: number;
}

export interface SamplingRow {
  sampling: string;
  trainAccuracy: number;
  testAccuracy: number;
  weightedF1: number;
}

export interface ExperimentResult {
  comparison: ModelRow[];
  crossValidation: CvRow[];
  samplingComparison: SamplingRow[];
  confusion: number[][];
  auc: number;
  oversampleLog: OversampleLog;
}

function xy(rows: FeatureRow[], classes: number[]): { X: number[][]; y: number[] } {
  const index = new Map(classes.map((c, i) => [c, i]));
  return {
    X: rows.map((r) => r.features),
    y: rows.map((r) => index.get(r.label)!),
  };
}

function fromCoded(y: number[], classes: number[]): number[] {
  return y.map((v) => classes[v]);
}

export function runExperiment(config: ExperimentConfig): ExperimentResult {
  const data = loadDataset(config.dataset, {
    cMax: config.cMax,
    classSet: config.classSet,
    exactOnly: config.exactOnly,
    derived: config.derivedFeatures,
  });
  if (config.classSet.length !== 2) {
    throw new Error("this harness benchmarks binary bridge-number problems");
  }
  fs.mkdirSync(config.outputDir, { recursive: true });
  const rng = mulberry32(config.seed);
  const { train, test } = stratifiedSplit(data.rows, config.splitRatio, rng);
  const trainXY = xy(train, config.classSet);
  const testXY = xy(test, config.classSet);

  // model comparison on the plain split
  const comparison: ModelRow[] = [];
  for (const name of config.classifiers) {
    const model = makeClassifier(name, config.seed, config.overrides[name] ?? {});
    model.train(trainXY.X, trainXY.y);
    const predTrain = model.predict(trainXY.X);
    const predTest = model.predict(testXY.X);
    comparison.push({
      model: name,
      trainAccuracy: accuracy(trainXY.y, predTrain),
      testAccuracy: accuracy(testXY.y, predTest),
      weightedF1: weightedF1(
        confusionMatrix(fromCoded(testXY.y, config.classSet), fromCoded(predTest, config.classSet), config.classSet)
      ),
    });
  }

  // cross-validation of the selected model
  const folds = stratifiedFolds(data.rows, config.folds, rng);
  const accs: number[] = [];
  const f1s: number[] = [];
  const aucs: number[] = [];
  for (let f = 0; f < folds.length; f++) {
    const heldOut = folds[f];
    const rest = folds.filter((_, i) => i !== f).flat();
    const tr = xy(rest, config.classSet);
    const te = xy(heldOut, config.classSet);
    const model = makeClassifier(
      config.selectedModel,
      config.seed + f,
      config.overrides[config.selectedModel] ?? {}
    );
    model.train(tr.X, tr.y);
    const pred = model.predict(te.X);
    const scores = model.scores(te.X);
    accs.push(accuracy(te.y, pred));
    f1s.push(
      weightedF1(
        confusionMatrix(fromCoded(te.y, config.classSet), fromCoded(pred, config.classSet), config.classSet)
      )
    );
    aucs.push(rocAuc(te.y, scores, 1));
  }
  const crossValidation: CvRow[] = [
    { metric: "accuracy", mean: mean(accs), std: std(accs) },
    { metric: "weighted_f1", mean: mean(f1s), std: std(f1s) },
    { metric: "roc_auc", mean: mean(aucs), std: std(aucs) },
  ];

  // sampling strategies applied to the training set only
  const oversampleLog: OversampleLog = { fallbacks: 0, messages: [] };
  const samplingComparison: SamplingRow[] = [];
  for (const strategy of config.sampling) {
    const sampled = applySampling(
      strategy,
      train,
      mulberry32(config.seed + 1000),
      config.cMax,
      config.derivedFeatures,
      oversampleLog
    );
    const tr = xy(sampled, config.classSet);
    const model = makeClassifier(
      config.selectedModel,
      config.seed,
      config.overrides[config.selectedModel] ?? {}
    );
    model.train(tr.X, tr.y);
    const predTest = model.predict(testXY.X);
    samplingComparison.push({
      sampling: strategy,
      trainAccuracy: accuracy(tr.y, model.predict(tr.X)),
      testAccuracy: accuracy(testXY.y, predTest),
      weightedF1: weightedF1(
        confusionMatrix(fromCoded(testXY.y, config.classSet), fromCoded(predTest, config.classSet), config.classSet)
      ),
    });
  }

  // plots for the selected model on the plain split
  const selected = makeClassifier(
    config.selectedModel,
    config.seed,
    config.overrides[config.selectedModel] ?? {}
  );
  selected.train(trainXY.X, trainXY.y);
  const predTest = selected.predict(testXY.X);
  const confusion = confusionMatrix(
    fromCoded(testXY.y, config.classSet),
    fromCoded(predTest, config.classSet),
    config.classSet
  );
  const scores = selected.scores(testXY.X);
  const auc = rocAuc(testXY.y, scores, 1);
  const curve = rocCurve(testXY.y, scores, 1);

  writeOutputs(config, { comparison, crossValidation, samplingComparison, confusion, auc, oversampleLog }, curve);
  return { comparison, crossValidation, samplingComparison, confusion, auc, oversampleLog };
}

function fmt(x: number): string {
  return x.toFixed(4);
}

function writeOutputs(
  config: ExperimentConfig,
  result: ExperimentResult,
  curve: { fpr: number; tpr: number }[]
): void {
  const dir = config.outputDir;
  const t1 = ["model,training_accuracy,test_accuracy,weighted_f1"];
  for (const r of result.comparison) {
    t1.push(`${r.model},${fmt(r.trainAccuracy)},${fmt(r.testAccuracy)},${fmt(r.weightedF1)}`);
  }
  fs.writeFileSync(path.join(dir, "model_comparison.csv"), t1.join("\n") + "\n");

  const t2 = ["metric,mean,std"];
  for (const r of result.crossValidation) {
    t2.push(`${r.metric},${fmt(r.mean)},${fmt(r.std)}`);
  }
  fs.writeFileSync(path.join(dir, "cross_validation.csv"), t2.join("\n") + "\n");

  const t3 = ["sampling,training_accuracy,test_accuracy,weighted_f1"];
  for (const r of result.samplingComparison) {
    t3.push(`${r.sampling},${fmt(r.trainAccuracy)},${fmt(r.testAccuracy)},${fmt(r.weightedF1)}`);
  }
  fs.writeFileSync(path.join(dir, "sampling_comparison.csv"), t3.join("\n") + "\n");

  fs.writeFileSync(path.join(dir, "confusion_matrix.svg"), confusionSvg(result.confusion, config.classSet));
  fs.writeFileSync(path.join(dir, "roc_curve.svg"), rocSvg(curve, result.auc));

  let gitHash = "unknown";
  try {
    gitHash = execSync("git rev-parse HEAD", { stdio: ["ignore", "pipe", "ignore"] })
      .toString()
      .trim();
  } catch {
    /* not a repo */
  }
  const manifest = {
    config,
    seed: config.seed,
    git_hash: gitHash,
    node: process.version,
    feature_encoding:
      "zero-padded signed Gauss entry sequence" +
      (config.derivedFeatures ? " + derived strand statistics" : "") +
      " (stand-in encoding; no canonical feature set exists for these datasets)",
    oversample_log: result.oversampleLog,
  };
  fs.writeFileSync(path.join(dir, "manifest.json"), JSON.stringify(manifest, null, 2) + "\n");
  fs.writeFileSync(
    path.join(dir, "metrics.json"),
    JSON.stringify(
      {
        comparison: result.comparison,
        crossValidation: result.crossValidation,
        samplingComparison: result.samplingComparison,
        confusion: result.confusion,
        auc: result.auc,
      },
      null,
      2
    ) + "\n"
  );
}
