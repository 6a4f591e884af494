export type Color = "r" | "g" | "b" | "k" | "Y";

export interface GraphDoc {
  n: number;
  rotation: number[][];
  outer_facets?: number[][];
}

export interface SessionState {
  id: string;
  graph: GraphDoc;
  mode: string;
  names: Record<string, string>;
  coloring: { edges: Record<string, Color> };
  history: number;
  version: number;
}

export interface CrossingDoc {
  face: number[] | null;
  edge: string;
  kind: "normal" | "generalized";
}

export interface RingInfo {
  id: number;
  color: Color;
  size: number;
  closed: boolean;
  crossings: CrossingDoc[];
}

export interface RingsDoc {
  version: number;
  rings: RingInfo[];
}

export interface SkeletonDoc {
  version: number;
  skeleton: {
    boundary?: Record<string, Color>;
    partitions: Record<string, number[][]>;
  };
}

export type Point = { x: number; y: number };

export function edgeKey(u: number, v: number): string {
  return u < v ? `${u}-${v}` : `${v}-${u}`;
}

export function parseEdge(key: string): [number, number] {
  const [a, b] = key.split("-").map(Number);
  return a < b ? [a, b] : [b, a];
}
