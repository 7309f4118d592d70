import { readFileSync } from "node:fs";
import Papa from "papaparse";

/** Fixed column schema of a jcrevival scan CSV. */
export const SCAN_COLUMNS = [
  "tau",
  "C_exact",
  "C_xproj",
  "C_series",
  "C_analytic",
  "abs_z",
  "a",
  "d",
  "max_offx",
  "trace_err",
  "branch_w_minus",
] as const;

export type ScanColumn = (typeof SCAN_COLUMNS)[number];

export interface ScanTable {
  /** source path, used for panel titles and error messages */
  path: string;
  /** column name -> values; absent entries in the file become NaN */
  columns: Map<string, number[]>;
  rows: number;
}

export class CsvSchemaError extends Error {}

/**
 * Load one scan CSV produced by the `jcrevival` CLI.
 *
 * The header is required to match the published schema exactly; empty
 * fields (methods that were not computed) parse to NaN so downstream
 * code can skip them without special cases.
 */
export function readScanCsv(path: string): ScanTable {
  const text = readFileSync(path, "utf-8");
  const parsed = Papa.parse<string[]>(text.trim(), { delimiter: "," });
  if (parsed.errors.length > 0) {
    throw new CsvSchemaError(`${path}: ${parsed.errors[0].message}`);
  }
  const [header, ...body] = parsed.data;
  if (!header || header.join(",") !== SCAN_COLUMNS.join(",")) {
    throw new CsvSchemaError(`${path}: header does not match the scan schema`);
  }
  const columns = new Map<string, number[]>(SCAN_COLUMNS.map((c) => [c, []]));
  for (const record of body) {
    if (record.length === 1 && record[0] === "") continue;
    if (record.length !== SCAN_COLUMNS.length) {
      throw new CsvSchemaError(`${path}: malformed row with ${record.length} fields`);
    }
    record.forEach((field, i) => {
      columns.get(SCAN_COLUMNS[i])!.push(field === "" ? NaN : Number(field));
    });
  }
  return { path, columns, rows: columns.get("tau")!.length };
}

/** Columns that hold at least one finite value. */
export function availableColumns(table: ScanTable): string[] {
  return SCAN_COLUMNS.filter((c) =>
    table.columns.get(c)!.some((v) => Number.isFinite(v)),
  );
}
