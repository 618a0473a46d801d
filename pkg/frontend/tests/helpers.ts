import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { CanvasLike } from "../src/render";
import { applyServerState, EditorState, initialState } from "../src/state";
import type {
  EvaluatePayload,
  HandlesPayload,
  OptimizePayload,
  SceneDoc,
} from "../src/types";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export const loadFixture = <T>(name: string): T =>
  JSON.parse(readFileSync(join(FIXTURES, name), "utf-8")) as T;

export const fixtureState = (): EditorState => {
  const scene = loadFixture<SceneDoc>("scene.json");
  const curve = loadFixture<EvaluatePayload>("evaluate.json");
  const handles = loadFixture<HandlesPayload>("handles.json");
  const excursion = loadFixture<{ excursion: number }>("excursion.json");
  return applyServerState(initialState(), scene, curve, handles, excursion.excursion);
};

export const optimizeFixture = (): OptimizePayload =>
  loadFixture<OptimizePayload>("optimize.json");

/** Minimal recording canvas standing in for a 2D context. */
export class RecordingCanvas implements CanvasLike {
  strokeStyle = "";
  fillStyle = "";
  lineWidth = 0;
  font = "";
  globalAlpha = 1;
  texts: { text: string; x: number; y: number }[] = [];
  strokes = 0;

  clearRect(): void {}
  fillRect(): void {}
  beginPath(): void {}
  moveTo(): void {}
  lineTo(): void {}
  arc(): void {}
  fill(): void {}
  stroke(): void {
    this.strokes += 1;
  }
  fillText(text: string, x: number, y: number): void {
    this.texts.push({ text, x, y });
  }
}
