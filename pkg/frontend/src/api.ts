/** Thin typed client for the studykin service.  The editor displays only
 * values taken verbatim from these responses; it never derives poses,
 * heights or classifications on its own. */

import type {
  EvaluatePayload,
  HandlesPayload,
  OptimizeMask,
  OptimizePayload,
  SceneDoc,
  ScenePayload,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;

  constructor(code: string, message: string) {
    super(message);
    this.code = code;
  }
}

const request = async <T>(
  url: string,
  init?: RequestInit,
): Promise<T> => {
  const response = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const text = await response.text();
  let body: unknown = null;
  try {
    body = text ? JSON.parse(text) : null;
  } catch {
    throw new ApiError("bad_input", `unparseable response from ${url}`);
  }
  if (!response.ok) {
    const err = body as { code?: string; message?: string } | null;
    throw new ApiError(err?.code ?? "bad_input", err?.message ?? response.statusText);
  }
  return body as T;
};

export class StudioApi {
  constructor(private readonly base: string = "") {}

  listScenes(): Promise<{ scenes: string[] }> {
    return request(`${this.base}/scenes`);
  }

  createScene(payload: ScenePayload): Promise<SceneDoc> {
    return request(`${this.base}/scenes`, {
      method: "POST",
      body: JSON.stringify(payload),
    });
  }

  getScene(id: string): Promise<SceneDoc> {
    return request(`${this.base}/scenes/${id}`);
  }

  putScene(id: string, payload: ScenePayload): Promise<SceneDoc> {
    return request(`${this.base}/scenes/${id}`, {
      method: "PUT",
      body: JSON.stringify(payload),
    });
  }

  evaluate(id: string, samples: number): Promise<EvaluatePayload> {
    return request(`${this.base}/scenes/${id}/evaluate`, {
      method: "POST",
      body: JSON.stringify({ samples }),
    });
  }

  handles(id: string, arcSamples: number): Promise<HandlesPayload> {
    return request(`${this.base}/scenes/${id}/handles`, {
      method: "POST",
      body: JSON.stringify({ arc_samples: arcSamples }),
    });
  }

  excursion(id: string, grid = 257): Promise<{ excursion: number }> {
    return request(`${this.base}/scenes/${id}/excursion`, {
      method: "POST",
      body: JSON.stringify({ grid }),
    });
  }

  optimize(
    id: string,
    mask: OptimizeMask,
    tol: number,
    signal?: AbortSignal,
  ): Promise<OptimizePayload> {
    return request(`${this.base}/scenes/${id}/optimize`, {
      method: "POST",
      body: JSON.stringify({ mask, tol, grid: 129 }),
      signal,
    });
  }

  poseEdit(
    id: string,
    edit: {
      index: number;
      translate?: [number, number, number];
      rotate?: { axis: [number, number, number]; angle: number };
      height?: number;
    },
  ): Promise<SceneDoc> {
    return request(`${this.base}/scenes/${id}/pose-edit`, {
      method: "POST",
      body: JSON.stringify(edit),
    });
  }
}
