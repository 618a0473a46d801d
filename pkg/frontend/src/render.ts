/** Canvas drawing of the labeled top view.
 *
 * Frames arrive from the server as origin + axis vectors; drawing projects
 * them onto the view plane and applies one uniform scale, so every glyph
 * stays congruent (no affine distortion) at any zoom.  Each control, Farin,
 * start and end pose is annotated with its height label in parentheses.
 */

import { heightLabel } from "./format.js";
import {
  frameToScreen,
  project,
  Vec2,
  ViewTransform,
  worldToScreen,
} from "./geometry.js";
import type { EditorState } from "./state.js";
import type { Frame } from "./types.js";

/** Structural subset of CanvasRenderingContext2D used by the renderer;
 * tests substitute a recording implementation. */
export interface CanvasLike {
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  font: string;
  globalAlpha: number;
  clearRect(x: number, y: number, w: number, h: number): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  stroke(): void;
  fill(): void;
  fillText(text: string, x: number, y: number): void;
}

const GLYPH_LENGTH = 0.3; // world units; constant => congruent glyphs
const AXIS_COLORS = ["#e05252", "#4caf6e", "#4a7dd6"];

export interface LabeledPoint {
  text: string;
  tooltip: string;
  world: Vec2;
  kind: "start" | "end" | "control" | "farin";
}

/** Height labels the current state must display, with their anchors in view
 * coordinates.  The values come verbatim from the API payloads. */
export const collectLabels = (state: EditorState, view: ViewTransform): LabeledPoint[] => {
  const labels: LabeledPoint[] = [];
  if (!state.handles) return labels;
  const { controls, farin } = state.handles;
  controls.forEach((c, i) => {
    const kind = i === 0 ? "start" : i === controls.length - 1 ? "end" : "control";
    labels.push({
      text: heightLabel(c.height),
      tooltip: String(c.height),
      world: project(c.frame.origin, view.axes),
      kind,
    });
  });
  farin.forEach((f) => {
    labels.push({
      text: heightLabel(f.height),
      tooltip: String(f.height),
      world: project(f.frame.origin, view.axes),
      kind: "farin",
    });
  });
  return labels;
};

const drawGrid = (
  ctx: CanvasLike,
  view: ViewTransform,
  width: number,
  height: number,
): void => {
  ctx.strokeStyle = "#2c3340";
  ctx.lineWidth = 1;
  const halfW = width / 2 / view.scale;
  const halfH = height / 2 / view.scale;
  const x0 = Math.floor(view.centerX - halfW);
  const x1 = Math.ceil(view.centerX + halfW);
  for (let x = x0; x <= x1; x += 1) {
    const sx = worldToScreen({ x, y: 0 }, view, width, height).x;
    ctx.beginPath();
    ctx.moveTo(sx, 0);
    ctx.lineTo(sx, height);
    ctx.stroke();
  }
  const y0 = Math.floor(view.centerY - halfH);
  const y1 = Math.ceil(view.centerY + halfH);
  for (let y = y0; y <= y1; y += 1) {
    const sy = worldToScreen({ x: 0, y }, view, width, height).y;
    ctx.beginPath();
    ctx.moveTo(0, sy);
    ctx.lineTo(width, sy);
    ctx.stroke();
  }
};

const drawPolyline = (
  ctx: CanvasLike,
  points: Vec2[],
  style: string,
  lineWidth: number,
): void => {
  if (points.length < 2) return;
  ctx.strokeStyle = style;
  ctx.lineWidth = lineWidth;
  ctx.beginPath();
  ctx.moveTo(points[0].x, points[0].y);
  for (const p of points.slice(1)) ctx.lineTo(p.x, p.y);
  ctx.stroke();
};

const drawGlyph = (
  ctx: CanvasLike,
  frame: Frame,
  view: ViewTransform,
  width: number,
  height: number,
  emphasized: boolean,
): void => {
  const o = frameToScreen(frame.origin, view, width, height);
  frame.axes.forEach((axis, i) => {
    const tip: [number, number, number] = [
      frame.origin[0] + GLYPH_LENGTH * axis[0],
      frame.origin[1] + GLYPH_LENGTH * axis[1],
      frame.origin[2] + GLYPH_LENGTH * axis[2],
    ];
    const s = frameToScreen(tip, view, width, height);
    ctx.strokeStyle = AXIS_COLORS[i];
    ctx.lineWidth = emphasized ? 2.5 : 1.2;
    ctx.beginPath();
    ctx.moveTo(o.x, o.y);
    ctx.lineTo(s.x, s.y);
    ctx.stroke();
  });
  ctx.beginPath();
  ctx.arc(o.x, o.y, emphasized ? 5 : 2.5, 0, 2 * Math.PI);
  ctx.fillStyle = emphasized ? "#f0b429" : "#9aa4b2";
  ctx.fill();
};

export const renderTopView = (
  ctx: CanvasLike,
  state: EditorState,
  view: ViewTransform,
  width: number,
  height: number,
): void => {
  ctx.globalAlpha = 1;
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = "#11151c";
  ctx.fillRect(0, 0, width, height);
  drawGrid(ctx, view, width, height);
  if (!state.handles || !state.curve) {
    return; // placeholder grid only
  }

  // constrained Farin arcs first, then the motion, then the handles
  for (const f of state.handles.farin) {
    const arc = f.arc.map((a) => frameToScreen(a.frame.origin, view, width, height));
    drawPolyline(ctx, arc, "#6b7280", 1);
  }

  const curve = state.curve.poses.map((p) =>
    frameToScreen(p.frame.origin, view, width, height),
  );
  drawPolyline(ctx, curve, "#7fb4ff", 2);
  state.curve.poses.forEach((p, i) => {
    if (i % 4 === 0) drawGlyph(ctx, p.frame, view, width, height, false);
  });

  state.handles.controls.forEach((c) => {
    const selected =
      state.selected?.kind === "control" && state.selected.index === c.index;
    drawGlyph(ctx, c.frame, view, width, height, true);
    if (selected) {
      const o = frameToScreen(c.frame.origin, view, width, height);
      ctx.strokeStyle = "#f0b429";
      ctx.lineWidth = 1.5;
      ctx.beginPath();
      ctx.arc(o.x, o.y, 10, 0, 2 * Math.PI);
      ctx.stroke();
    }
  });
  state.handles.farin.forEach((f) => {
    const o = frameToScreen(f.frame.origin, view, width, height);
    ctx.beginPath();
    ctx.arc(o.x, o.y, 5, 0, 2 * Math.PI);
    ctx.fillStyle =
      state.selected?.kind === "farin" && state.selected.segment === f.segment
        ? "#f0b429"
        : "#c084fc";
    ctx.fill();
  });

  ctx.font = "13px system-ui, sans-serif";
  ctx.fillStyle = "#e5e9f0";
  for (const label of collectLabels(state, view)) {
    const s = worldToScreen(label.world, view, width, height);
    ctx.fillText(label.text, s.x + 9, s.y - 9);
  }

  if (state.stale) {
    ctx.globalAlpha = 0.25;
    ctx.fillStyle = "#000000";
    ctx.fillRect(0, 0, width, height);
    ctx.globalAlpha = 1;
    ctx.fillStyle = "#f0b429";
    ctx.font = "12px system-ui, sans-serif";
    ctx.fillText("syncing…", 10, 18);
  }
};

/** Objective trace sparkline; refuses to draw an increasing trace so a
 * regression in the optimizer is loudly visible. */
export const renderTrace = (
  ctx: CanvasLike,
  trace: number[],
  width: number,
  height: number,
): boolean => {
  ctx.globalAlpha = 1;
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = "#11151c";
  ctx.fillRect(0, 0, width, height);
  if (trace.length === 0) return true;
  const bad = trace.some((v, i) => i > 0 && v > trace[i - 1] + 1e-15);
  if (bad) {
    ctx.fillStyle = "#e05252";
    ctx.fillText("non-monotone trace", 6, 14);
    return false;
  }
  const max = trace[0] || 1;
  const pts = trace.map((v, i) => ({
    x: 4 + (i * (width - 8)) / Math.max(trace.length - 1, 1),
    y: height - 4 - (v / max) * (height - 8),
  }));
  drawPolyline(ctx, pts, "#4caf6e", 1.5);
  return true;
};
