import { SessionApi } from "./api.js";
import { tutteLayout } from "./layout.js";
import type {
  Color,
  Point,
  RingInfo,
  SessionState,
  SkeletonDoc,
} from "./types.js";
import { edgeKey, parseEdge } from "./types.js";

export interface HistoryEntry {
  kind: "ecs" | "vcs";
  label: string;
}

/**
 * Client-side mirror of one session.  The board never recolors anything
 * itself: every move POSTs to the session API and the returned document
 * replaces the whole state, so the rendered colors always equal the
 * server's.
 */
export class Board {
  state!: SessionState;
  rings: RingInfo[] = [];
  ringsVersion = -1;
  layout: Point[] = [];
  skeleton: SkeletonDoc["skeleton"] | null = null;
  history: HistoryEntry[] = [];

  constructor(
    private api: SessionApi,
    public onChange: () => void = () => {},
  ) {}

  async create(body: object): Promise<void> {
    this.adopt(await this.api.createSession(body));
    this.history = [];
    await this.refreshPanels();
  }

  async load(sessionId: string): Promise<void> {
    this.adopt(await this.api.getSession(sessionId));
    this.history = [];
    await this.refreshPanels();
  }

  private adopt(state: SessionState): void {
    this.state = state;
    this.layout = tutteLayout(state.graph);
    this.onChange();
  }

  async refreshPanels(): Promise<void> {
    const [rings, skel] = await Promise.all([
      this.api.getRings(this.state.id),
      this.api.getSkeleton(this.state.id),
    ]);
    this.rings = rings.rings;
    this.ringsVersion = rings.version;
    this.skeleton = skel.skeleton;
    this.onChange();
  }

  edges(): [number, number][] {
    return Object.keys(this.state.coloring.edges).map(parseEdge);
  }

  colorOf(u: number, v: number): Color {
    return this.state.coloring.edges[edgeKey(u, v)];
  }

  /** Multiset of edge colors, for the render-equals-server invariant. */
  colorMultiset(): Record<string, number> {
    const out: Record<string, number> = {};
    for (const c of Object.values(this.state.coloring.edges)) {
      out[c] = (out[c] ?? 0) + 1;
    }
    return out;
  }

  /** Rings whose crossings include the given edge (the click target). */
  ringsAt(u: number, v: number): RingInfo[] {
    const key = edgeKey(u, v);
    return this.rings.filter((r) => r.crossings.some((c) => c.edge === key));
  }

  async applyRing(ring: RingInfo): Promise<void> {
    const next = await this.api.applyEcs(this.state.id, ring.id, this.ringsVersion);
    this.adopt(next);
    this.history.push({
      kind: "ecs",
      label: `ECS ${ring.color} ring (${ring.size} crossings)`,
    });
    await this.refreshPanels();
  }

  async applyVcs(pair: [number, number], seed: number): Promise<void> {
    const next = await this.api.applyVcs(this.state.id, pair, seed);
    this.adopt(next);
    this.history.push({ kind: "vcs", label: `VCS {${pair[0]},${pair[1]}} @ ${seed}` });
    await this.refreshPanels();
  }

  async undo(): Promise<void> {
    const next = await this.api.undo(this.state.id);
    this.adopt(next);
    this.history.pop();
    await this.refreshPanels();
  }

  vertexLabel(v: number): string {
    return this.state.names?.[String(v)] ?? String(v);
  }

  /** The edge nearest to a canvas point, within a snap radius. */
  pickEdge(p: Point, snap = 0.08): [number, number] | null {
    let best: [number, number] | null = null;
    let bestD = snap;
    for (const [u, v] of this.edges()) {
      const a = this.layout[u];
      const b = this.layout[v];
      const d = distToSegment(p, a, b);
      if (d < bestD) {
        bestD = d;
        best = [u, v];
      }
    }
    return best;
  }
}

function distToSegment(p: Point, a: Point, b: Point): number {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len2 = dx * dx + dy * dy;
  const t = len2 === 0 ? 0 : Math.max(0, Math.min(1, ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2));
  const qx = a.x + t * dx;
  const qy = a.y + t * dy;
  return Math.hypot(p.x - qx, p.y - qy);
}
