import { describe, expect, it } from "vitest";

import {
  clampToDomain,
  effectiveMode,
  initialState,
  insideDomain,
  selectPoint,
  setMode,
  setT,
  sliderToT,
  SLIDER_STEPS,
  T_MAX,
  tToSlider,
} from "./state.js";
import type { DomainData } from "./types.js";

function fakeDomain(): DomainData {
  const left: [number, number][] = [];
  const right: [number, number][] = [];
  const arc: [number, number][] = [];
  for (let i = 0; i <= 64; i++) {
    left.push([0, 0.01 + (i / 64) * 3]);
    right.push([0.5, Math.sqrt(3) / 2 + (i / 64) * 3]);
    const a = Math.PI - (i / 64) * (Math.PI / 3);
    arc.push([1 + Math.cos(a), Math.sin(a)]);
  }
  return {
    left_edge: left,
    right_edge: right,
    arc,
    hex_vertex: [0.5, Math.sqrt(3) / 2],
    square_point: [0, 1],
    y_max: 3,
  };
}

describe("slider mapping", () => {
  it("has an exact zero detent", () => {
    expect(sliderToT(0)).toBe(0);
    expect(tToSlider(0)).toBe(0);
  });

  it("tops out at T_MAX", () => {
    expect(sliderToT(SLIDER_STEPS)).toBeCloseTo(T_MAX, 12);
  });

  it("is monotone and log-spaced", () => {
    let prev = 0;
    for (let p = 0; p <= SLIDER_STEPS; p += 40) {
      const t = sliderToT(p);
      expect(t).toBeGreaterThanOrEqual(prev);
      prev = t;
    }
    const r1 = sliderToT(200) / sliderToT(100);
    const r2 = sliderToT(300) / sliderToT(200);
    expect(r1).toBeCloseTo(r2, 9);
  });

  it("round-trips through the inverse", () => {
    for (const p of [0, 1, 57, 200, SLIDER_STEPS]) {
      expect(tToSlider(sliderToT(p))).toBe(p);
    }
  });
});

describe("domain membership and clamping", () => {
  it("accepts interior and rejects exterior points", () => {
    expect(insideDomain(0.25, 1.0)).toBe(true);
    expect(insideDomain(0.7, 1.0)).toBe(false);
    expect(insideDomain(0.25, 0.3)).toBe(false);
    expect(insideDomain(-0.1, 1.0)).toBe(false);
  });

  it("keeps interior clicks unchanged", () => {
    const [x, y] = clampToDomain(0.25, 1.0, fakeDomain());
    expect(x).toBe(0.25);
    expect(y).toBe(1.0);
  });

  it("clamps exterior clicks to the nearest boundary", () => {
    const [x, y] = clampToDomain(0.8, 1.2, fakeDomain());
    expect(x).toBeCloseTo(0.5, 6);
    expect(y).toBeCloseTo(1.2, 6);
    const [x2, y2] = clampToDomain(-0.3, 1.5, fakeDomain());
    expect(x2).toBeCloseTo(0, 6);
    expect(y2).toBeCloseTo(1.5, 6);
  });

  it("clamps points under the arc onto the arc", () => {
    const [x, y] = clampToDomain(0.25, 0.2, fakeDomain());
    expect(Math.hypot(x - 1, y)).toBeCloseTo(1.0, 3);
  });

  it("selectPoint applies the clamp", () => {
    const s = selectPoint(initialState(), 0.9, 1.0, fakeDomain());
    expect(s.x).toBeCloseTo(0.5, 6);
  });
});

describe("mode rules", () => {
  it("t = 0 is allowed in golden and deformed but not solved", () => {
    expect(effectiveMode(0, "golden")).toBe("golden");
    expect(effectiveMode(0, "deformed")).toBe("deformed");
    expect(effectiveMode(0, "solved")).toBe("deformed");
    expect(effectiveMode(0.01, "solved")).toBe("solved");
  });

  it("dragging t above zero leaves the golden family", () => {
    expect(effectiveMode(0.125, "golden")).toBe("deformed");
    expect(effectiveMode(0.125, "deformed")).toBe("deformed");
  });

  it("switching to solved at t = 0 bumps t to the first notch", () => {
    const s = setMode(initialState(), "solved");
    expect(s.mode).toBe("solved");
    expect(s.t).toBeGreaterThan(0);
    expect(s.t).toBe(sliderToT(1));
  });

  it("setT demotes solved mode at the zero detent", () => {
    let s = initialState();
    s = setMode(s, "solved");
    s = setT(s, 0);
    expect(s.mode).toBe("deformed");
  });
});
