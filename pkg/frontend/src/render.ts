import type { Board } from "./board.js";
import type { Point, RingInfo } from "./types.js";
import { parseEdge } from "./types.js";

const EDGE_COLOR: Record<string, string> = {
  r: "#d62728",
  g: "#2ca02c",
  b: "#1f77b4",
  k: "#666666",
  Y: "#e6b800",
};

export interface ViewTransform {
  scale: number;
  cx: number;
  cy: number;
}

export function fitView(width: number, height: number): ViewTransform {
  const scale = 0.42 * Math.min(width, height);
  return { scale, cx: width / 2, cy: height / 2 };
}

export function toScreen(p: Point, view: ViewTransform): Point {
  return { x: view.cx + p.x * view.scale, y: view.cy - p.y * view.scale };
}

export function toWorld(p: Point, view: ViewTransform): Point {
  return { x: (p.x - view.cx) / view.scale, y: (view.cy - p.y) / view.scale };
}

export function drawBoard(
  ctx: CanvasRenderingContext2D,
  board: Board,
  view: ViewTransform,
  hover: [number, number] | null,
  preview: RingInfo | null,
): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  const pos = board.layout.map((p) => toScreen(p, view));

  for (const [u, v] of board.edges()) {
    const c = board.colorOf(u, v);
    const a = pos[u];
    const b = pos[v];
    ctx.lineWidth = hover && hover[0] === u && hover[1] === v ? 4 : 2;
    ctx.strokeStyle = EDGE_COLOR[c] ?? "#999999";
    if (c === "Y") {
      // the abandoned edge renders as a doubled line
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const n = Math.hypot(dx, dy) || 1;
      const ox = (-dy / n) * 2.5;
      const oy = (dx / n) * 2.5;
      for (const s of [-1, 1]) {
        ctx.beginPath();
        ctx.moveTo(a.x + s * ox, a.y + s * oy);
        ctx.lineTo(b.x + s * ox, b.y + s * oy);
        ctx.stroke();
      }
    } else {
      ctx.beginPath();
      ctx.moveTo(a.x, a.y);
      ctx.lineTo(b.x, b.y);
      ctx.stroke();
    }
  }

  if (preview) {
    for (const crossing of preview.crossings) {
      const [u, v] = parseEdge(crossing.edge);
      const a = pos[u];
      const b = pos[v];
      const mx = (a.x + b.x) / 2;
      const my = (a.y + b.y) / 2;
      ctx.beginPath();
      // generalized crossings get a distinct square marker
      if (crossing.kind === "generalized") {
        ctx.fillStyle = "#ff8800";
        ctx.fillRect(mx - 5, my - 5, 10, 10);
      } else {
        ctx.fillStyle = EDGE_COLOR[preview.color];
        ctx.arc(mx, my, 5, 0, 2 * Math.PI);
        ctx.fill();
      }
      ctx.setLineDash([4, 3]);
      ctx.strokeStyle = EDGE_COLOR[preview.color];
      ctx.lineWidth = 1.5;
      ctx.beginPath();
      ctx.arc(mx, my, 9, 0, 2 * Math.PI);
      ctx.stroke();
      ctx.setLineDash([]);
    }
  }

  for (let v = 0; v < board.state.graph.n; v++) {
    const p = pos[v];
    ctx.beginPath();
    ctx.fillStyle = "white";
    ctx.strokeStyle = "#333333";
    ctx.lineWidth = 1.5;
    ctx.arc(p.x, p.y, 13, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = "#111111";
    ctx.font = "11px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(board.vertexLabel(v), p.x, p.y);
  }
}
