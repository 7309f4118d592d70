import { ScanTable, availableColumns } from "./csv.js";
import { escapeXml, formatTick, linePath, linearScale, ticks } from "./svg.js";

export interface PlotSpec {
  /** one loaded scan per panel, stacked vertically */
  tables: ScanTable[];
  /** concurrence (or diagnostic) columns to overlay in every panel */
  cols: string[];
  /** optional coherent amplitude: marks revival centers 2 pi k alpha */
  markRevivalsAlpha?: number;
  title?: string;
  width?: number;
  panelHeight?: number;
}

export class MissingColumnError extends Error {}

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"];
const MARGIN = { top: 34, right: 16, bottom: 40, left: 52 };

function panelSvg(
  table: ScanTable,
  spec: Required<Pick<PlotSpec, "cols" | "width" | "panelHeight">> &
    Pick<PlotSpec, "markRevivalsAlpha">,
  yOffset: number,
): string {
  const { cols, width, panelHeight } = spec;
  const tau = table.columns.get("tau")!;
  const have = availableColumns(table);
  for (const col of cols) {
    if (!have.includes(col)) {
      throw new MissingColumnError(`${table.path}: column '${col}' not present in scan`);
    }
  }
  const tauLo = Math.min(...tau);
  const tauHi = Math.max(...tau);
  let yHi = 0;
  for (const col of cols) {
    for (const v of table.columns.get(col)!) {
      if (Number.isFinite(v) && v > yHi) yHi = v;
    }
  }
  yHi = Math.max(yHi * 1.05, 0.1);

  const x = linearScale([tauLo, tauHi], [MARGIN.left, width - MARGIN.right]);
  const y = linearScale([0, yHi], [yOffset + panelHeight - MARGIN.bottom, yOffset + MARGIN.top]);
  const plotTop = yOffset + MARGIN.top;
  const plotBottom = yOffset + panelHeight - MARGIN.bottom;

  const parts: string[] = [];
  parts.push(
    `<rect x="${MARGIN.left}" y="${plotTop}" width="${width - MARGIN.left - MARGIN.right}" ` +
      `height="${plotBottom - plotTop}" fill="none" stroke="#333" stroke-width="1"/>`,
  );
  for (const t of ticks([tauLo, tauHi])) {
    const px = x(t).toFixed(2);
    parts.push(`<line x1="${px}" y1="${plotBottom}" x2="${px}" y2="${plotBottom + 4}" stroke="#333"/>`);
    parts.push(
      `<text x="${px}" y="${plotBottom + 16}" text-anchor="middle" font-size="10">${formatTick(t)}</text>`,
    );
  }
  for (const t of ticks([0, yHi], 4)) {
    const py = y(t).toFixed(2);
    parts.push(`<line x1="${MARGIN.left - 4}" y1="${py}" x2="${MARGIN.left}" y2="${py}" stroke="#333"/>`);
    parts.push(
      `<text x="${MARGIN.left - 7}" y="${py}" text-anchor="end" dominant-baseline="middle" ` +
        `font-size="10">${formatTick(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${(width / 2).toFixed(0)}" y="${plotBottom + 32}" text-anchor="middle" font-size="11">tau = g t</text>`,
  );
  parts.push(
    `<text x="14" y="${((plotTop + plotBottom) / 2).toFixed(0)}" text-anchor="middle" font-size="11" ` +
      `transform="rotate(-90 14 ${((plotTop + plotBottom) / 2).toFixed(0)})">concurrence</text>`,
  );

  if (spec.markRevivalsAlpha !== undefined && spec.markRevivalsAlpha > 0) {
    for (let k = 1; 2 * Math.PI * k * spec.markRevivalsAlpha <= tauHi; k++) {
      const center = 2 * Math.PI * k * spec.markRevivalsAlpha;
      if (center < tauLo) continue;
      const px = x(center).toFixed(2);
      parts.push(
        `<line class="revival-marker" x1="${px}" y1="${plotTop}" x2="${px}" y2="${plotBottom}" ` +
          `stroke="#999" stroke-dasharray="3,3"/>`,
      );
      parts.push(
        `<text x="${px}" y="${plotTop - 4}" text-anchor="middle" font-size="9" fill="#666">k=${k}</text>`,
      );
    }
  }

  cols.forEach((col, i) => {
    const path = linePath(tau, table.columns.get(col)!, x, y);
    parts.push(
      `<path class="series series-${escapeXml(col)}" d="${path}" fill="none" ` +
        `stroke="${PALETTE[i % PALETTE.length]}" stroke-width="1"/>`,
    );
  });

  // legend in the top-right corner of the panel
  cols.forEach((col, i) => {
    const ly = plotTop + 12 + 14 * i;
    const lx = width - MARGIN.right - 110;
    parts.push(
      `<line x1="${lx}" y1="${ly}" x2="${lx + 18}" y2="${ly}" ` +
        `stroke="${PALETTE[i % PALETTE.length]}" stroke-width="2"/>`,
    );
    parts.push(
      `<text class="legend" x="${lx + 23}" y="${ly + 3}" font-size="10">${escapeXml(col)}</text>`,
    );
  });

  parts.push(
    `<text x="${MARGIN.left}" y="${plotTop - 8}" font-size="11" font-weight="bold">` +
      `${escapeXml(table.path.split("/").pop() ?? table.path)}</text>`,
  );
  return parts.join("\n");
}

/** Render the spec to a complete standalone SVG document. */
export function render(spec: PlotSpec): string {
  if (spec.tables.length === 0) throw new Error("no input tables");
  if (spec.cols.length === 0) throw new Error("no columns selected");
  const width = spec.width ?? 860;
  const panelHeight = spec.panelHeight ?? 300;
  const height = panelHeight * spec.tables.length + (spec.title ? 24 : 0);
  const top = spec.title ? 24 : 0;

  const body = spec.tables
    .map((table, i) =>
      panelSvg(table, { cols: spec.cols, width, panelHeight, markRevivalsAlpha: spec.markRevivalsAlpha }, top + i * panelHeight),
    )
    .join("\n");
  const title = spec.title
    ? `<text x="${width / 2}" y="17" text-anchor="middle" font-size="13" font-weight="bold">${escapeXml(spec.title)}</text>\n`
    : "";
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="sans-serif">\n` +
    `<rect width="${width}" height="${height}" fill="white"/>\n` +
    title +
    body +
    "\n</svg>\n"
  );
}
