#!/usr/bin/env node
import { writeFileSync } from "node:fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { CsvSchemaError, readScanCsv } from "./csv.js";
import { MissingColumnError, render } from "./plot.js";

export async function main(argv: string[]): Promise<number> {
  const args = await yargs(argv)
    .scriptName("plot")
    .usage("$0 --in <csv> [--in <csv>...] --cols <list> --out <img> [--mark-revivals <alpha>]")
    .option("in", {
      type: "string",
      array: true,
      demandOption: true,
      describe: "scan CSV file(s); each becomes one stacked panel",
    })
    .option("cols", {
      type: "string",
      demandOption: true,
      describe: "comma-separated columns to overlay, e.g. C_exact,C_analytic",
    })
    .option("out", { type: "string", demandOption: true, describe: "output SVG path" })
    .option("mark-revivals", {
      type: "number",
      describe: "coherent amplitude alpha; draws markers at tau = 2 pi k alpha",
    })
    .option("title", { type: "string" })
    .strict()
    .exitProcess(false)
    .fail((msg) => {
      throw new Error(msg);
    })
    .parse();

  const cols = args.cols
    .split(",")
    .map((c) => c.trim())
    .filter((c) => c.length > 0);
  const tables = (args.in as string[]).map(readScanCsv);
  const svg = render({
    tables,
    cols,
    markRevivalsAlpha: args.markRevivals,
    title: args.title,
  });
  writeFileSync(args.out, svg);
  return 0;
}

const invokedDirectly = process.argv[1]?.endsWith("cli.js");
if (invokedDirectly) {
  main(hideBin(process.argv))
    .then((code) => {
      process.exitCode = code;
    })
    .catch((err: unknown) => {
      const reason =
        err instanceof CsvSchemaError || err instanceof MissingColumnError
          ? err.message
          : err instanceof Error
            ? err.message
            : String(err);
      console.error(`plot: ${reason}`);
      process.exitCode = 1;
    });
}
