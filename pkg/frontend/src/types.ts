/** Wire types of the studykin HTTP API. */

export interface DqJson {
  e: [number, number, number, number];
  t: [number, number, number, number];
}

/** Displayable rigid frame; always produced server-side. */
export interface Frame {
  origin: [number, number, number];
  axes: [
    [number, number, number],
    [number, number, number],
    [number, number, number],
  ];
}

export interface PoseEntry {
  t: number;
  pose: DqJson;
  height: number;
  frame: Frame;
}

export interface EvaluatePayload {
  poses: PoseEntry[];
}

export interface ControlHandle {
  index: number;
  pose: DqJson;
  height: number;
  kappa: number;
  frame: Frame;
}

export interface ArcSample {
  f: number;
  height: number;
  frame: Frame;
}

export interface FarinHandle {
  segment: number;
  f: number;
  pose: DqJson;
  height: number;
  frame: Frame;
  arc: ArcSample[];
}

export interface HandlesPayload {
  controls: ControlHandle[];
  farin: FarinHandle[];
}

export interface ScenePayload {
  ctrl: DqJson[];
  farin: number[];
  meta?: Record<string, unknown>;
}

export interface SceneDoc extends ScenePayload {
  id: string;
  created: string;
  modified: string;
  meta: Record<string, unknown>;
}

export interface OptimizeMask {
  heights?: number[];
  farin?: number[];
}

export interface OptimizePayload {
  scene: ScenePayload;
  trace: number[];
  excursion: number;
}

export interface ApiErrorPayload {
  code: string;
  message: string;
}
