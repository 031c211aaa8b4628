export interface FeatureRow {
  /** zero-padded signed Gauss entries, length 2 * cMax */
  features: number[];
  /** bridge-number class */
  label: number;
  /** the source code text, kept so rotation oversampling can decode it */
  code: string;
}

export interface Dataset {
  rows: FeatureRow[];
  cMax: number;
  classes: number[];
}

export type SamplingStrategy = "none" | "undersample" | "smote" | "cyclic-rotations";

export interface ExperimentConfig {
  dataset: string;
  outputDir: string;
  seed: number;
  splitRatio: number;
  folds: number;
  cMax: number;
  classSet: number[];
  exactOnly: boolean;
  selectedModel: string;
  classifiers: string[];
  sampling: SamplingStrategy[];
  derivedFeatures: boolean;
  /** per-model overrides, e.g. smaller iteration caps for quick runs */
  overrides: Record<string, Record<string, number>>;
}

export class DatasetMissing extends Error {}
export class ClassAbsent extends Error {}
export class TooManyCrossings extends Error {}
export class InsufficientRotations extends Error {}

export const DEFAULT_CONFIG: Omit<ExperimentConfig, "dataset" | "outputDir"> = {
  seed: 7,
  splitRatio: 0.8,
  folds: 10,
  cMax: 16,
  classSet: [3, 4],
  exactOnly: true,
  selectedModel: "RandomForest",
  classifiers: [
    "RandomForest",
    "DecisionTree",
    "ExtraTrees",
    "LogisticRegression",
    "StochasticGradientDescent",
    "GradientBoosting",
    "BoostedTrees",
    "GaussianNaiveBayes",
    "NeuralNetwork",
    "SupportVectorMachine",
    "KNearestNeighbors",
  ],
  sampling: ["none", "undersample", "smote", "cyclic-rotations"],
  derivedFeatures: false,
  overrides: {},
};
