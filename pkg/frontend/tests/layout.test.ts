import { describe, expect, it } from "vitest";

import { traceFaces, tutteLayout } from "../src/layout.js";
import type { GraphDoc } from "../src/types.js";

const K4: GraphDoc = {
  n: 4,
  rotation: [
    [1, 3, 2],
    [2, 3, 0],
    [0, 3, 1],
    [0, 1, 2],
  ],
};

const SIGMA55: GraphDoc = {
  n: 8,
  rotation: [
    [1, 4, 3, 2, 7],
    [6, 5, 4, 0, 7],
    [3, 0, 7],
    [4, 0, 2],
    [5, 1, 0, 3],
    [6, 1, 4],
    [7, 1, 5],
    [2, 0, 1, 6],
  ],
  outer_facets: [[2, 3, 4, 5, 6, 7]],
};

describe("face tracing", () => {
  it("finds the four triangles of K4", () => {
    const faces = traceFaces(K4);
    expect(faces).toHaveLength(4);
    for (const f of faces) expect(f).toHaveLength(3);
  });

  it("covers each directed edge exactly once", () => {
    const faces = traceFaces(K4);
    const darts = faces.flatMap((f) =>
      f.map((u, i) => `${u}->${f[(i + 1) % f.length]}`),
    );
    expect(new Set(darts).size).toBe(12);
    expect(darts).toHaveLength(12);
  });
});

describe("tutte layout", () => {
  it("pins the outer facet to the unit circle", () => {
    const pos = tutteLayout(SIGMA55);
    for (const v of SIGMA55.outer_facets![0]) {
      expect(Math.hypot(pos[v].x, pos[v].y)).toBeCloseTo(1, 6);
    }
  });

  it("relaxes interior vertices to the neighbor average", () => {
    const pos = tutteLayout(SIGMA55);
    for (const v of [0, 1]) {
      const nbrs = SIGMA55.rotation[v];
      const ax = nbrs.reduce((s, w) => s + pos[w].x, 0) / nbrs.length;
      const ay = nbrs.reduce((s, w) => s + pos[w].y, 0) / nbrs.length;
      expect(pos[v].x).toBeCloseTo(ax, 4);
      expect(pos[v].y).toBeCloseTo(ay, 4);
    }
  });

  it("keeps all positions distinct (straight-line drawing)", () => {
    const pos = tutteLayout(SIGMA55);
    const seen = new Set(pos.map((p) => `${p.x.toFixed(6)},${p.y.toFixed(6)}`));
    expect(seen.size).toBe(SIGMA55.n);
  });

  it("lays out a triangulation without declared outer facets", () => {
    const pos = tutteLayout(K4);
    expect(pos).toHaveLength(4);
    const seen = new Set(pos.map((p) => `${p.x.toFixed(5)},${p.y.toFixed(5)}`));
    expect(seen.size).toBe(4);
  });
});
