import type { RingsDoc, SessionState, SkeletonDoc } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

async function jsonOrThrow<T>(res: Response): Promise<T> {
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    throw new ApiError(res.status, (body as { error?: string }).error ?? res.statusText);
  }
  return body as T;
}

/** Thin typed client for the session API; every state change round-trips. */
export class SessionApi {
  constructor(private base: string) {}

  createSession(body: object): Promise<SessionState> {
    return fetch(`${this.base}/sessions`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    }).then((r) => jsonOrThrow<SessionState>(r));
  }

  getSession(id: string): Promise<SessionState> {
    return fetch(`${this.base}/sessions/${id}`).then((r) =>
      jsonOrThrow<SessionState>(r),
    );
  }

  getRings(id: string): Promise<RingsDoc> {
    return fetch(`${this.base}/sessions/${id}/rings`).then((r) =>
      jsonOrThrow<RingsDoc>(r),
    );
  }

  getSkeleton(id: string): Promise<SkeletonDoc> {
    return fetch(`${this.base}/sessions/${id}/skeleton`).then((r) =>
      jsonOrThrow<SkeletonDoc>(r),
    );
  }

  applyEcs(id: string, ringId: number, version: number): Promise<SessionState> {
    return fetch(`${this.base}/sessions/${id}/ecs`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ ring_id: ringId, version }),
    }).then((r) => jsonOrThrow<SessionState>(r));
  }

  applyVcs(id: string, pair: [number, number], seed: number): Promise<SessionState> {
    return fetch(`${this.base}/sessions/${id}/vcs`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ pair, seed }),
    }).then((r) => jsonOrThrow<SessionState>(r));
  }

  undo(id: string): Promise<SessionState> {
    return fetch(`${this.base}/sessions/${id}/undo`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({}),
    }).then((r) => jsonOrThrow<SessionState>(r));
  }
}
