import { ApiError, SessionApi } from "./api.js";
import { Board } from "./board.js";
import { drawBoard, fitView, toWorld } from "./render.js";
import type { RingInfo } from "./types.js";

const apiBase =
  new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8543";
const api = new SessionApi(apiBase);

const canvas = document.getElementById("board") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const ringPanel = document.getElementById("rings")!;
const skeletonPanel = document.getElementById("skeleton")!;
const historyPanel = document.getElementById("history")!;
const banner = document.getElementById("banner")!;
const scenarioInput = document.getElementById("scenario") as HTMLInputElement;

let board: Board | null = null;
let hover: [number, number] | null = null;
let preview: RingInfo | null = null;
let busy = false;
const view = fitView(canvas.width, canvas.height);

function toast(message: string, isError = false): void {
  banner.textContent = message;
  banner.className = isError ? "banner error" : "banner";
  if (message) setTimeout(() => (banner.textContent = ""), 4000);
}

function redraw(): void {
  if (!board) return;
  drawBoard(ctx, board, view, hover, preview);
  renderRingPanel();
  renderSkeleton();
  renderHistory();
  (document.getElementById("undo") as HTMLButtonElement).disabled =
    busy || board.state.history === 0;
}

function renderRingPanel(): void {
  if (!board) return;
  const shown = hover ? board.ringsAt(hover[0], hover[1]) : board.rings;
  ringPanel.innerHTML = "";
  const title = document.createElement("div");
  title.className = "panel-title";
  title.textContent = hover
    ? `rings crossing ${board.vertexLabel(hover[0])}-${board.vertexLabel(hover[1])}`
    : `all rings (${board.rings.length})`;
  ringPanel.appendChild(title);
  if (hover && shown.length === 0) {
    const empty = document.createElement("div");
    empty.className = "ring-item na";
    empty.textContent = "no closed ring crosses this edge (open canal)";
    ringPanel.appendChild(empty);
  }
  for (const ring of shown) {
    const div = document.createElement("div");
    div.className = "ring-item";
    const gen = ring.crossings.filter((c) => c.kind === "generalized").length;
    div.textContent = `#${ring.id} ${ring.color}-ring, ${ring.size} crossings${
      gen ? ` (${gen} generalized)` : ""
    }`;
    div.onmouseenter = () => {
      preview = ring;
      redraw();
    };
    div.onmouseleave = () => {
      preview = null;
      redraw();
    };
    div.onclick = () => applyRing(ring);
    ringPanel.appendChild(div);
  }
}

function renderSkeleton(): void {
  if (!board?.skeleton) return;
  const parts = board.skeleton.partitions;
  skeletonPanel.innerHTML = "<div class='panel-title'>skeleton</div>";
  for (const color of Object.keys(parts)) {
    const blocks = parts[color]
      .filter((b) => b.length > 1)
      .map((b) => `{${b.map((v) => board!.vertexLabel(v)).join(",")}}`)
      .join(" ");
    const div = document.createElement("div");
    div.textContent = `${color}: ${blocks || "all separate"}`;
    skeletonPanel.appendChild(div);
  }
}

function renderHistory(): void {
  if (!board) return;
  historyPanel.innerHTML = "<div class='panel-title'>history</div>";
  board.history.forEach((h, i) => {
    const div = document.createElement("div");
    div.textContent = `${i + 1}. ${h.label}`;
    historyPanel.appendChild(div);
  });
}

async function guarded(work: () => Promise<void>): Promise<void> {
  if (busy || !board) return;
  busy = true;
  redraw();
  try {
    await work();
  } catch (e) {
    if (e instanceof ApiError && e.status === 409) {
      toast(`stale ring: ${e.message}`, true);
      await board.refreshPanels();
    } else if (e instanceof TypeError) {
      toast("connection lost", true);
    } else {
      toast(String(e), true);
    }
  } finally {
    busy = false;
    preview = null;
    redraw();
  }
}

function applyRing(ring: RingInfo): void {
  void guarded(() => board!.applyRing(ring));
}

canvas.addEventListener("mousemove", (ev) => {
  if (!board) return;
  const rect = canvas.getBoundingClientRect();
  const p = toWorld({ x: ev.clientX - rect.left, y: ev.clientY - rect.top }, view);
  hover = board.pickEdge(p);
  redraw();
});

canvas.addEventListener("click", () => {
  if (!board || !hover) return;
  const candidates = board.ringsAt(hover[0], hover[1]);
  if (candidates.length === 1) applyRing(candidates[0]);
});

document.getElementById("undo")!.addEventListener("click", () => {
  void guarded(() => board!.undo());
});

document.getElementById("load")!.addEventListener("click", () => {
  const name = scenarioInput.value.trim() || "fig7_rotation";
  const next = new Board(api, redraw);
  void (async () => {
    try {
      await next.create({ scenario: name });
      board = next;
      toast(`loaded scenario ${name}`);
      redraw();
    } catch (e) {
      if (e instanceof ApiError && e.status === 404) {
        toast("session not found", true);
      } else {
        toast(`cannot load: ${e}`, true);
      }
    }
  })();
});

toast(`ready; API at ${apiBase}`);
