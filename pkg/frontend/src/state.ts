/** Editor state: the motion-curve cache always mirrors the last
 * acknowledged server response; anything drawn between a local mutation and
 * the next acknowledgement is flagged stale. */

import type {
  EvaluatePayload,
  HandlesPayload,
  SceneDoc,
} from "./types.js";

export type Selection =
  | { kind: "control"; index: number }
  | { kind: "farin"; segment: number };

export interface OptimizerStatus {
  running: boolean;
  trace: number[];
}

export interface EditorState {
  scene: SceneDoc | null;
  curve: EvaluatePayload | null;
  handles: HandlesPayload | null;
  excursion: number | null;
  stale: boolean;
  selected: Selection | null;
  optimizer: OptimizerStatus;
  error: string | null;
}

export const initialState = (): EditorState => ({
  scene: null,
  curve: null,
  handles: null,
  excursion: null,
  stale: false,
  selected: null,
  optimizer: { running: false, trace: [] },
  error: null,
});

/** A local mutation went out; rendered data is no longer authoritative. */
export const markStale = (state: EditorState): EditorState => ({
  ...state,
  stale: true,
});

/** Server acknowledged: replace every cached payload at once. */
export const applyServerState = (
  state: EditorState,
  scene: SceneDoc,
  curve: EvaluatePayload,
  handles: HandlesPayload,
  excursion: number,
): EditorState => ({
  ...state,
  scene,
  curve,
  handles,
  excursion,
  stale: false,
  error: null,
});

export const select = (
  state: EditorState,
  selected: Selection | null,
): EditorState => ({ ...state, selected });

export const withError = (state: EditorState, error: string): EditorState => ({
  ...state,
  error,
});

export const optimizerStarted = (state: EditorState): EditorState => ({
  ...state,
  optimizer: { running: true, trace: [] },
});

export const optimizerFinished = (
  state: EditorState,
  trace: number[],
): EditorState => ({
  ...state,
  optimizer: { running: false, trace },
});

/** Display invariant of the objective trace. */
export const traceIsNonIncreasing = (trace: number[]): boolean =>
  trace.every((v, i) => i === 0 || v <= trace[i - 1] + 1e-15);
