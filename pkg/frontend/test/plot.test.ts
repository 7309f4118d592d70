import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { readScanCsv } from "../src/csv.js";
import { MissingColumnError, render } from "../src/plot.js";
import { writeSyntheticCsv } from "./helpers.js";

const dir = mkdtempSync(join(tmpdir(), "jcplot-render-"));

function sampleTable(name = "sample.csv") {
  const path = join(dir, name);
  const tau = Array.from({ length: 60 }, (_, i) => i * 0.5);
  writeSyntheticCsv(path, {
    tau,
    C_exact: tau.map((t) => Math.exp(-t / 20)),
    C_analytic: tau.map((t) => Math.max(0, Math.cos(2 * t)) * Math.exp(-t / 20)),
  });
  return readScanCsv(path);
}

describe("render", () => {
  it("produces a standalone SVG with one path per column", () => {
    const svg = render({ tables: [sampleTable()], cols: ["C_exact", "C_analytic"] });
    expect(svg.startsWith("<svg ")).toBe(true);
    expect(svg.trim().endsWith("</svg>")).toBe(true);
    expect(svg).toContain('class="series series-C_exact"');
    expect(svg).toContain('class="series series-C_analytic"');
    expect(svg.match(/class="legend"/g)).toHaveLength(2);
  });

  it("stacks one panel per input table", () => {
    const tables = [sampleTable("a.csv"), sampleTable("b.csv")];
    const svg = render({ tables, cols: ["C_exact"] });
    expect(svg.match(/series-C_exact/g)).toHaveLength(2);
    expect(svg).toContain("a.csv");
    expect(svg).toContain("b.csv");
  });

  it("marks revival centers when asked", () => {
    const svg = render({
      tables: [sampleTable()],
      cols: ["C_exact"],
      markRevivalsAlpha: 2.0,
    });
    // 2 pi k alpha <= 29.5 allows k = 1 and 2
    expect(svg.match(/class="revival-marker"/g)).toHaveLength(2);
    expect(svg).toContain(">k=1</text>");
  });

  it("omits markers without an alpha", () => {
    const svg = render({ tables: [sampleTable()], cols: ["C_exact"] });
    expect(svg).not.toContain("revival-marker");
  });

  it("rejects a column the scan never computed", () => {
    expect(() => render({ tables: [sampleTable()], cols: ["C_series"] })).toThrow(
      MissingColumnError,
    );
  });

  it("re-renders byte-identically", () => {
    const spec = { tables: [sampleTable()], cols: ["C_exact"], title: "t" };
    expect(render(spec)).toBe(render(spec));
  });
});
