"""HTTP session bridge for the explorer UI.

JSON over plain http.server; one lock per session serializes mutations while
reads hand out the latest complete state snapshot.  Sessions live in memory
only, and undo restores byte-identical state documents.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .coloring import EdgeColoring
from .errors import PortBusy, RgbtError, StaleRing, UnknownScenario
from .kempe import (
    CanalRing,
    apply_ecs,
    apply_vcs,
    boundary_crossing_rings,
    rings_of,
    skeleton,
    vertex_ring,
)
from .coloring import induce_edge_coloring, induce_vertex_coloring
from .planar import Host, SemiMpg, canon_edge, validate
from .scenarios_builtin import builtin_scenario
from .tiling import check_tiling, classify_diamond, enumerate_tilings


@dataclass
class Session:
    sid: str
    host: Host
    mode: str
    names: dict[int, str]
    stack: list[str] = field(default_factory=list)  # serialized state docs
    version: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock)
    current: str = ""

    def state_doc(self) -> dict:
        doc = json.loads(self.current)
        doc["history"] = len(self.stack)
        doc["version"] = self.version
        return doc

    def coloring(self) -> EdgeColoring:
        return EdgeColoring.from_json(json.loads(self.current)["coloring"])

    def set_state(self, t: EdgeColoring, push: bool) -> None:
        if push:
            self.stack.append(self.current)
        doc = {
            "id": self.sid,
            "graph": self.host.to_json(),
            "mode": self.mode,
            "names": {str(v): n for v, n in self.names.items()},
            "coloring": t.to_json(),
        }
        self.current = json.dumps(doc, sort_keys=True)
        self.version += 1


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, body: dict) -> Session:
        mode = body.get("mode", "rgb")
        names: dict[int, str] = {}
        if "scenario" in body:
            scn = builtin_scenario(body["scenario"])
            host = scn.sigma
            names = scn.index_names
            mode = body.get("mode", scn.mode)
            if len(scn.fixed):
                tiling = scn.fixed
            else:
                tiling = next(enumerate_tilings(host, mode), None)
        else:
            host = validate(body["graph"])
            if body.get("tiling"):
                tiling = EdgeColoring.from_json(body["tiling"])
            else:
                tiling = next(enumerate_tilings(host, mode), None)
        if tiling is None:
            raise RgbtError("host admits no tiling in the requested mode")
        # scenario states may be partial; total states must check out
        if tiling.total_on(host):
            verdict = check_tiling(host, tiling, mode, ergb_diamonds="local")
            if not verdict.ok:
                raise RgbtError(f"supplied tiling invalid: {verdict.violations[:2]}")
        sid = uuid.uuid4().hex[:12]
        s = Session(sid=sid, host=host, mode=mode, names=names)
        s.set_state(tiling, push=False)
        s.stack.clear()
        with self._lock:
            self._sessions[sid] = s
        return s

    def get(self, sid: str) -> Session | None:
        with self._lock:
            return self._sessions.get(sid)


def session_rings(s: Session) -> list[CanalRing]:
    """Applicable rings: traced, around-vertex, and (on bordered hosts)
    border-crossing rings closed through the abstract exterior."""
    t = s.coloring()
    rings: dict[tuple, CanalRing] = {}

    def keep(r: CanalRing) -> None:
        try:
            t2 = apply_ecs(s.host, t, r)
        except StaleRing:
            return
        if check_tiling(s.host, t2, s.mode, ergb_diamonds="local").ok:
            rings.setdefault(r.key(), r)

    boundary_vertices = (
        {v for f in s.host.outer_facets for v in f}
        if isinstance(s.host, SemiMpg)
        else set()
    )
    for color in "rgb":
        for r in rings_of(s.host, t, color):
            keep(r)
        for v in range(s.host.n):
            if v in boundary_vertices:
                continue
            r = vertex_ring(s.host, t, v, color)
            if r is not None:
                keep(r)
        if isinstance(s.host, SemiMpg):
            for r in boundary_crossing_rings(s.host, t, color):
                keep(r)
    return [rings[k] for k in sorted(rings, key=repr)]


def _rings_doc(s: Session) -> dict:
    rings = session_rings(s)
    return {
        "version": s.version,
        "rings": [
            {"id": i, "color": r.color, "size": len(r.crossings), **r.to_json()}
            for i, r in enumerate(rings)
        ],
    }


def _diamonds_doc(s: Session) -> dict:
    from .planar import remove_edge

    t = s.coloring()
    out = []
    if isinstance(s.host, SemiMpg):
        for f in s.host.outer_facets:
            if len(f) != 4:
                continue
            for i in (0, 1):
                a, b = f[i], f[(i + 2) % 4]
                if s.host.has_edge(a, b):
                    continue
                try:
                    v = classify_diamond(s.host, t, canon_edge(a, b))
                except RgbtError:
                    continue
                out.append(v.to_json())
    # abandoned edges classify against the residual host
    for e in t.edges_of_color("Y"):
        try:
            q = remove_edge(s.host, e)
            residual = EdgeColoring(
                {d: c for d, c in t.assignment.items() if d != e}
            )
            v = classify_diamond(q, residual, e)
        except RgbtError:
            continue
        out.append(v.to_json())
    return {"version": s.version, "diamonds": out}


def _skeleton_doc(s: Session) -> dict:
    t = s.coloring()
    if isinstance(s.host, SemiMpg) and s.host.outer_facets:
        sk = skeleton(s.host, t, max(s.host.outer_facets, key=len))
        return {"version": s.version, "skeleton": sk.to_json()}
    # no border: report whole-graph monochrome components per color
    parts: dict[str, list[list[int]]] = {}
    for color in "rgb":
        comp_of: dict[int, int] = {}
        blocks: dict[int, list[int]] = {}
        nxt = 0
        for v in range(s.host.n):
            if v in comp_of:
                continue
            comp_of[v] = nxt
            blocks[nxt] = [v]
            stack = [v]
            while stack:
                u = stack.pop()
                for w in s.host.rotation[u]:
                    if w not in comp_of and t.get((u, w)) == color:
                        comp_of[w] = nxt
                        blocks[nxt].append(w)
                        stack.append(w)
            nxt += 1
        parts[color] = sorted(sorted(b) for b in blocks.values())
    return {"version": s.version, "skeleton": {"partitions": parts}}


class _Handler(BaseHTTPRequestHandler):
    store: SessionStore = None  # type: ignore[assignment]

    def log_message(self, *args) -> None:  # quiet
        pass

    def _send(self, code: int, doc: dict) -> None:
        data = json.dumps(doc, sort_keys=True).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length", 0))
        if not length:
            return {}
        return json.loads(self.rfile.read(length))

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self) -> None:
        parts = [p for p in self.path.split("?")[0].split("/") if p]
        if len(parts) >= 2 and parts[0] == "sessions":
            s = self.store.get(parts[1])
            if s is None:
                self._send(404, {"error": "no such session"})
                return
            with s.lock:
                if len(parts) == 2:
                    self._send(200, s.state_doc())
                elif parts[2] == "rings":
                    self._send(200, _rings_doc(s))
                elif parts[2] == "skeleton":
                    self._send(200, _skeleton_doc(s))
                elif parts[2] == "diamonds":
                    self._send(200, _diamonds_doc(s))
                else:
                    self._send(404, {"error": f"unknown resource {parts[2]}"})
            return
        self._send(404, {"error": "not found"})

    def do_POST(self) -> None:
        parts = [p for p in self.path.split("?")[0].split("/") if p]
        try:
            body = self._body()
        except json.JSONDecodeError:
            self._send(400, {"error": "bad JSON"})
            return
        try:
            if parts == ["sessions"]:
                s = self.store.create(body)
                self._send(201, s.state_doc())
                return
            if len(parts) == 3 and parts[0] == "sessions":
                s = self.store.get(parts[1])
                if s is None:
                    self._send(404, {"error": "no such session"})
                    return
                action = parts[2]
                with s.lock:
                    if action == "ecs":
                        self._do_ecs(s, body)
                    elif action == "vcs":
                        self._do_vcs(s, body)
                    elif action == "undo":
                        self._do_undo(s)
                    else:
                        self._send(404, {"error": f"unknown action {action}"})
                return
            self._send(404, {"error": "not found"})
        except (StaleRing, UnknownScenario) as exc:
            self._send(409, {"error": str(exc)})
        except RgbtError as exc:
            self._send(400, {"error": str(exc)})
        except (KeyError, ValueError, TypeError) as exc:
            self._send(400, {"error": f"bad request: {exc}"})

    def _do_ecs(self, s: Session, body: dict) -> None:
        t = s.coloring()
        if "ring_id" in body:
            if body.get("version") not in (None, s.version):
                raise StaleRing("ring list is stale; refresh /rings")
            rings = session_rings(s)
            rid = int(body["ring_id"])
            if not 0 <= rid < len(rings):
                raise StaleRing(f"no ring {rid} in the current state")
            ring = rings[rid]
        else:
            ring = CanalRing.from_json(body["ring"])
        t2 = apply_ecs(s.host, t, ring)
        verdict = check_tiling(s.host, t2, s.mode, ergb_diamonds="local")
        if not verdict.ok:
            raise StaleRing("switch would break the tiling")
        s.set_state(t2, push=True)
        self._send(200, s.state_doc())

    def _do_vcs(self, s: Session, body: dict) -> None:
        t = s.coloring()
        vc = induce_vertex_coloring(s.host, t)
        vc2 = apply_vcs(s.host, vc, tuple(body["pair"]), int(body["seed"]))
        t2 = induce_edge_coloring(s.host, vc2)
        s.set_state(t2, push=True)
        self._send(200, s.state_doc())

    def _do_undo(self, s: Session) -> None:
        if not s.stack:
            self._send(409, {"error": "history empty"})
            return
        s.current = s.stack.pop()
        s.version += 1
        self._send(200, s.state_doc())


def make_server(port: int = 0) -> ThreadingHTTPServer:
    handler = type("Handler", (_Handler,), {"store": SessionStore()})
    try:
        return ThreadingHTTPServer(("127.0.0.1", port), handler)
    except OSError as exc:
        raise PortBusy(f"cannot bind port {port}: {exc}") from exc


def serve(port: int) -> None:
    httpd = make_server(port)
    print(f"rgbt session API on http://127.0.0.1:{httpd.server_address[1]}", flush=True)
    try:
        httpd.serve_forever()
    finally:
        httpd.server_close()
