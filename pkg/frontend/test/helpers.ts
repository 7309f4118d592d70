import { execFileSync } from "node:child_process";
import { existsSync, mkdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

import { SCAN_COLUMNS } from "../src/csv.js";

export const CACHE_DIR = join(fileURLToPath(new URL(".", import.meta.url)), ".cache");

/** Build a well-formed scan CSV string from per-column value arrays. */
export function syntheticCsv(columns: Partial<Record<string, number[]>>): string {
  const tau = columns.tau ?? [];
  const lines = [SCAN_COLUMNS.join(",")];
  for (let i = 0; i < tau.length; i++) {
    const row = SCAN_COLUMNS.map((name) => {
      const v = columns[name]?.[i];
      return v === undefined || Number.isNaN(v) ? "" : String(v);
    });
    lines.push(row.join(","));
  }
  return lines.join("\n") + "\n";
}

export function writeSyntheticCsv(
  path: string,
  columns: Partial<Record<string, number[]>>,
): void {
  writeFileSync(path, syntheticCsv(columns));
}

/**
 * Ensure a canonical preset CSV exists in the cache, generating it with
 * the primary scanner CLI on first use.  These are minutes-scale runs,
 * so the cache persists between test invocations.
 */
export function ensurePreset(name: string): string {
  mkdirSync(CACHE_DIR, { recursive: true });
  const csvPath = join(CACHE_DIR, `${name}.csv`);
  if (!existsSync(csvPath)) {
    execFileSync(
      "python3",
      ["-m", "jcrevival.cli", "preset", name, "--out-dir", CACHE_DIR, "--workers", "4"],
      { stdio: "inherit", timeout: 600_000 },
    );
  }
  return csvPath;
}
