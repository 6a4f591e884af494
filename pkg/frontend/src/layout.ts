import type { GraphDoc, Point } from "./types.js";

/** Face tracing on the rotation system: next(u->v) exits through the
 *  neighbor immediately preceding u in rotation[v]. */
export function traceFaces(graph: GraphDoc): number[][] {
  const index: Map<number, number>[] = graph.rotation.map((nbrs) => {
    const m = new Map<number, number>();
    nbrs.forEach((u, i) => m.set(u, i));
    return m;
  });
  const seen = new Set<string>();
  const faces: number[][] = [];
  for (let v0 = 0; v0 < graph.n; v0++) {
    for (const u0 of graph.rotation[v0]) {
      if (seen.has(`${v0},${u0}`)) continue;
      const cycle: number[] = [];
      let u = v0;
      let v = u0;
      while (!seen.has(`${u},${v}`)) {
        seen.add(`${u},${v}`);
        cycle.push(u);
        const rot = graph.rotation[v];
        const i = index[v].get(u)!;
        const w = rot[(i - 1 + rot.length) % rot.length];
        u = v;
        v = w;
      }
      faces.push(cycle);
    }
  }
  return faces;
}

/**
 * Tutte barycentric layout: the outer cycle (declared outer facet, else the
 * largest traced face) is pinned to a regular polygon and every interior
 * vertex relaxes to the average of its neighbors.  Deterministic; plenty of
 * sweeps so positions settle well below pixel size.
 */
export function tutteLayout(graph: GraphDoc, sweeps = 600): Point[] {
  let outer: number[] | undefined = graph.outer_facets?.length
    ? [...graph.outer_facets].sort((a, b) => b.length - a.length)[0]
    : undefined;
  if (!outer) {
    const faces = traceFaces(graph);
    outer = faces.reduce((best, f) => (f.length > best.length ? f : best), faces[0]);
  }
  const pos: Point[] = new Array(graph.n);
  const pinned = new Array<boolean>(graph.n).fill(false);
  outer.forEach((v, i) => {
    const ang = (2 * Math.PI * i) / outer!.length + Math.PI / 2;
    pos[v] = { x: Math.cos(ang), y: Math.sin(ang) };
    pinned[v] = true;
  });
  for (let v = 0; v < graph.n; v++) {
    if (!pos[v]) pos[v] = { x: 0, y: 0 };
  }
  for (let it = 0; it < sweeps; it++) {
    for (let v = 0; v < graph.n; v++) {
      if (pinned[v]) continue;
      let sx = 0;
      let sy = 0;
      for (const w of graph.rotation[v]) {
        sx += pos[w].x;
        sy += pos[w].y;
      }
      const d = graph.rotation[v].length;
      pos[v] = { x: sx / d, y: sy / d };
    }
  }
  return pos;
}
