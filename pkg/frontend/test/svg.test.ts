import { describe, expect, it } from "vitest";

import { formatTick, linePath, linearScale, ticks } from "../src/svg.js";

describe("linearScale", () => {
  it("maps domain endpoints to range endpoints", () => {
    const s = linearScale([0, 10], [50, 250]);
    expect(s(0)).toBe(50);
    expect(s(10)).toBe(250);
    expect(s(5)).toBe(150);
  });

  it("supports inverted ranges for y axes", () => {
    const s = linearScale([0, 1], [300, 20]);
    expect(s(0)).toBe(300);
    expect(s(1)).toBe(20);
  });
});

describe("ticks", () => {
  it("produces round values spanning the domain", () => {
    const t = ticks([0, 200]);
    expect(t[0]).toBe(0);
    expect(t[t.length - 1]).toBeLessThanOrEqual(200);
    expect(t.length).toBeGreaterThanOrEqual(4);
    for (const v of t) expect(Number.isFinite(v)).toBe(true);
  });

  it("handles sub-unit domains", () => {
    const t = ticks([0, 0.31], 4);
    expect(t).toContain(0);
    expect(Math.max(...t)).toBeLessThanOrEqual(0.31);
  });

  it("never emits negative zero labels", () => {
    expect(formatTick(ticks([-1, 1], 4).find((v) => v === 0)!)).toBe("0");
  });
});

describe("linePath", () => {
  const x = linearScale([0, 3], [0, 300]);
  const y = linearScale([0, 1], [100, 0]);

  it("draws a continuous polyline", () => {
    const d = linePath([0, 1, 2, 3], [0, 0.5, 0.5, 1], x, y);
    expect(d.startsWith("M")).toBe(true);
    expect(d.match(/L/g)).toHaveLength(3);
  });

  it("breaks the line at NaN samples instead of bridging them", () => {
    const d = linePath([0, 1, 2, 3], [0, NaN, 0.5, 1], x, y);
    expect(d.match(/M/g)).toHaveLength(2);
    expect(d.match(/L/g)).toHaveLength(1);
  });

  it("is deterministic", () => {
    const args: [number[], number[]] = [[0, 1, 2], [0.1, 0.9, 0.4]];
    expect(linePath(...args, x, y)).toBe(linePath(...args, x, y));
  });
});
