#!/usr/bin/env node
import * as fs from "fs";

import { runExperiment } from "./experiment";
import { renderReport } from "./report";
import { DEFAULT_CONFIG, ExperimentConfig } from "./types";

function usage(): never {
  console.error("usage: mlharness run --config FILE | mlharness report DIR");
  process.exit(2);
}

function loadConfig(file: string): ExperimentConfig {
  const raw = JSON.parse(fs.readFileSync(file, "utf-8"));
  if (!raw.dataset || !raw.outputDir) {
    throw new Error("config needs at least dataset and outputDir");
  }
  return { ...DEFAULT_CONFIG, ...raw };
}

function main(argv: string[]): number {
  const [cmd, ...rest] = argv;
  if (cmd === "run") {
    const flag = rest.indexOf("--config");
    if (flag < 0 || !rest[flag + 1]) usage();
    const config = loadConfig(rest[flag + 1]);
    const result = runExperiment(config);
    console.log(renderReport(config.outputDir));
    if (result.oversampleLog.messages.length) {
      for (const msg of result.oversampleLog.messages) console.error(msg);
    }
    return 0;
  }
  if (cmd === "report") {
    if (!rest[0]) usage();
    console.log(renderReport(rest[0]));
    return 0;
  }
  usage();
}

try {
  process.exit(main(process.argv.slice(2)));
} catch (err) {
  console.error(`error: ${err instanceof Error ? err.message : err}`);
  process.exit(1);
}
