/** Editor entry point: wires the canvas, sliders and buttons to the API.
 *
 * Mutations always round-trip: local input -> pose-edit / PUT -> re-fetch
 * evaluate + handles + excursion -> redraw.  Between those two steps the
 * frame is flagged stale.
 */

import { ApiError, StudioApi } from "./api.js";
import { excursionReadout, heightTooltip } from "./format.js";
import {
  AxisPair,
  closestVertexIndex,
  DEFAULT_VIEW,
  distance,
  frameToScreen,
  screenToWorld,
  Vec2,
  ViewTransform,
} from "./geometry.js";
import { renderTopView, renderTrace } from "./render.js";
import {
  applyServerState,
  EditorState,
  initialState,
  markStale,
  optimizerFinished,
  optimizerStarted,
  select,
  withError,
} from "./state.js";
import type { ScenePayload } from "./types.js";

const CURVE_SAMPLES = 65;
const ARC_SAMPLES = 65;
const FARIN_MIN = 0.01;
const FARIN_MAX = 0.99;

/** Bundled showcase scene (quadratic, interior height -28/9). */
const DEMO_SCENE: ScenePayload = {
  ctrl: [
    { e: [1, 0, 0, 0], t: [0, 0, 0, 0] },
    {
      e: [0.5, 0.5, 0.5, 0.5],
      t: [
        0.3 + 7 / 9, -0.3 + 7 / 9, 0.7 + 7 / 9, -0.7 + 7 / 9,
      ],
    },
    {
      e: [Math.SQRT1_2, 0, 0, Math.SQRT1_2],
      t: [0, 1.5 * Math.SQRT1_2, -0.5 * Math.SQRT1_2, 0],
    },
  ],
  farin: [0.4, 0.65],
  meta: { name: "showcase", height_fractions: { "1": "-28/9" } },
};

const getElement = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

class Editor {
  private state: EditorState = initialState();
  private view: ViewTransform = { ...DEFAULT_VIEW };
  private readonly api = new StudioApi("");
  private sceneId = "";
  private abort: AbortController | null = null;
  private dragging:
    | { kind: "control"; index: number; last: Vec2 }
    | { kind: "farin"; segment: number }
    | null = null;

  private readonly canvas = getElement<HTMLCanvasElement>("view");
  private readonly traceCanvas = getElement<HTMLCanvasElement>("trace");
  private readonly status = getElement<HTMLDivElement>("status");
  private readonly excursion = getElement<HTMLDivElement>("excursion");
  private readonly heightSlider = getElement<HTMLInputElement>("height");
  private readonly heightValue = getElement<HTMLSpanElement>("height-value");
  private readonly farinSlider = getElement<HTMLInputElement>("farin");
  private readonly farinValue = getElement<HTMLSpanElement>("farin-value");

  async boot(): Promise<void> {
    const listed = await this.api.listScenes();
    if (listed.scenes.length > 0) {
      this.sceneId = listed.scenes[0];
    } else {
      this.sceneId = (await this.api.createScene(DEMO_SCENE)).id;
    }
    this.wire();
    await this.refresh();
  }

  private setState(state: EditorState): void {
    this.state = state;
    this.redraw();
  }

  private redraw(): void {
    const ctx = this.canvas.getContext("2d");
    if (ctx) {
      renderTopView(ctx, this.state, this.view, this.canvas.width, this.canvas.height);
    }
    const traceCtx = this.traceCanvas.getContext("2d");
    if (traceCtx) {
      renderTrace(traceCtx, this.state.optimizer.trace,
        this.traceCanvas.width, this.traceCanvas.height);
    }
    this.excursion.textContent = excursionReadout(this.state.excursion);
    this.status.textContent = this.state.error
      ?? (this.state.optimizer.running ? "optimizing…"
        : this.state.stale ? "syncing…" : "ready");
    this.syncSliders();
  }

  private syncSliders(): void {
    const sel = this.state.selected;
    if (sel?.kind === "control" && this.state.handles) {
      const handle = this.state.handles.controls[sel.index];
      this.heightSlider.disabled =
        sel.index === 0 || sel.index === this.state.handles.controls.length - 1;
      this.heightSlider.value = String(handle.height);
      this.heightValue.textContent = heightTooltip(
        handle.height, this.state.scene?.meta, sel.index);
    } else {
      this.heightSlider.disabled = true;
    }
    if (sel?.kind === "farin" && this.state.handles) {
      const handle = this.state.handles.farin[sel.segment];
      this.farinSlider.disabled = false;
      this.farinSlider.value = String(handle.f);
      this.farinValue.textContent = handle.f.toFixed(3);
    } else {
      this.farinSlider.disabled = true;
    }
  }

  private async refresh(): Promise<void> {
    try {
      const [scene, curve, handles, excursion] = await Promise.all([
        this.api.getScene(this.sceneId),
        this.api.evaluate(this.sceneId, CURVE_SAMPLES),
        this.api.handles(this.sceneId, ARC_SAMPLES),
        this.api.excursion(this.sceneId),
      ]);
      this.setState(applyServerState(
        this.state, scene, curve, handles, excursion.excursion));
    } catch (err) {
      this.setState(withError(this.state, describe(err)));
    }
  }

  private async mutate(action: () => Promise<unknown>): Promise<void> {
    this.setState(markStale(this.state));
    try {
      await action();
    } catch (err) {
      this.setState(withError(this.state, describe(err)));
    }
    await this.refresh();
  }

  // --- interaction -------------------------------------------------------

  private hitTest(p: Vec2): { kind: "control"; index: number } | { kind: "farin"; segment: number } | null {
    if (!this.state.handles) return null;
    const { width, height } = this.canvas;
    for (const f of this.state.handles.farin) {
      const s = frameToScreen(f.frame.origin, this.view, width, height);
      if (distance(p, s) < 10) return { kind: "farin", segment: f.segment };
    }
    for (const c of this.state.handles.controls) {
      const s = frameToScreen(c.frame.origin, this.view, width, height);
      if (distance(p, s) < 12) return { kind: "control", index: c.index };
    }
    return null;
  }

  private canvasPoint(ev: PointerEvent): Vec2 {
    const rect = this.canvas.getBoundingClientRect();
    return {
      x: ((ev.clientX - rect.left) / rect.width) * this.canvas.width,
      y: ((ev.clientY - rect.top) / rect.height) * this.canvas.height,
    };
  }

  private wire(): void {
    this.canvas.addEventListener("pointerdown", (ev) => {
      const p = this.canvasPoint(ev);
      const hit = this.hitTest(p);
      this.setState(select(this.state, hit));
      if (hit?.kind === "control") {
        this.dragging = { kind: "control", index: hit.index, last: p };
        this.canvas.setPointerCapture(ev.pointerId);
      } else if (hit?.kind === "farin") {
        this.dragging = { kind: "farin", segment: hit.segment };
        this.canvas.setPointerCapture(ev.pointerId);
      }
    });

    this.canvas.addEventListener("pointerup", async (ev) => {
      const drag = this.dragging;
      this.dragging = null;
      if (!drag) return;
      const p = this.canvasPoint(ev);
      const { width, height } = this.canvas;
      if (drag.kind === "control") {
        const from = screenToWorld(drag.last, this.view, width, height);
        const to = screenToWorld(p, this.view, width, height);
        const d: [number, number, number] = [0, 0, 0];
        d[this.view.axes[0]] = to.x - from.x;
        d[this.view.axes[1]] = to.y - from.y;
        if (Math.hypot(...d) > 1e-9) {
          await this.mutate(() =>
            this.api.poseEdit(this.sceneId, { index: drag.index, translate: d }));
        }
      } else if (this.state.handles) {
        const handle = this.state.handles.farin[drag.segment];
        const arcScreen = handle.arc.map((a) =>
          frameToScreen(a.frame.origin, this.view, width, height));
        const f = handle.arc[closestVertexIndex(p, arcScreen)].f;
        await this.setFarin(drag.segment, f);
      }
    });

    this.heightSlider.addEventListener("change", async () => {
      const sel = this.state.selected;
      if (sel?.kind !== "control") return;
      const height = Number(this.heightSlider.value);
      await this.mutate(() =>
        this.api.poseEdit(this.sceneId, { index: sel.index, height }));
    });

    this.farinSlider.addEventListener("change", async () => {
      const sel = this.state.selected;
      if (sel?.kind !== "farin") return;
      await this.setFarin(sel.segment, Number(this.farinSlider.value));
    });

    getElement<HTMLButtonElement>("rotate-minus").addEventListener("click",
      () => this.rotateSelected(-Math.PI / 12));
    getElement<HTMLButtonElement>("rotate-plus").addEventListener("click",
      () => this.rotateSelected(Math.PI / 12));

    getElement<HTMLSelectElement>("plane").addEventListener("change", (ev) => {
      const value = (ev.target as HTMLSelectElement).value;
      const axes: AxisPair = value === "x1x3" ? [0, 2]
        : value === "x2x3" ? [1, 2] : [0, 1];
      this.view = { ...this.view, axes };
      this.redraw();
    });

    getElement<HTMLInputElement>("zoom").addEventListener("input", (ev) => {
      this.view = { ...this.view, scale: Number((ev.target as HTMLInputElement).value) };
      this.redraw();
    });

    getElement<HTMLButtonElement>("optimize").addEventListener("click",
      () => this.runOptimizer());
    getElement<HTMLButtonElement>("cancel").addEventListener("click", () => {
      this.abort?.abort();
    });
  }

  private async setFarin(segment: number, f: number): Promise<void> {
    if (!this.state.scene) return;
    const clamped = Math.min(FARIN_MAX, Math.max(FARIN_MIN, f));
    const farin = [...this.state.scene.farin];
    farin[segment] = clamped;
    const payload: ScenePayload = {
      ctrl: this.state.scene.ctrl,
      farin,
      meta: this.state.scene.meta,
    };
    await this.mutate(() => this.api.putScene(this.sceneId, payload));
  }

  private async rotateSelected(angle: number): Promise<void> {
    const sel = this.state.selected;
    if (sel?.kind !== "control") return;
    // rotate about the view-plane normal through the pose's own origin
    const normal: [number, number, number] = [0, 0, 0];
    normal[3 - this.view.axes[0] - this.view.axes[1]] = 1;
    await this.mutate(() => this.api.poseEdit(this.sceneId, {
      index: sel.index,
      rotate: { axis: normal, angle },
    }));
  }

  private async runOptimizer(): Promise<void> {
    if (!this.state.handles || this.state.optimizer.running) return;
    const heights = this.state.handles.controls
      .slice(1, -1)
      .map((c) => c.index);
    const useFarin = getElement<HTMLInputElement>("free-farin").checked;
    const mask = {
      heights,
      farin: useFarin ? this.state.handles.farin.map((f) => f.segment) : [],
    };
    if (mask.heights.length + mask.farin.length === 0) return;
    this.abort = new AbortController();
    this.setState(optimizerStarted(this.state));
    try {
      const result = await this.api.optimize(
        this.sceneId, mask, 1e-7, this.abort.signal);
      this.setState(optimizerFinished(this.state, result.trace));
      // apply the improved scene only after an uncancelled completion
      await this.mutate(() => this.api.putScene(this.sceneId, {
        ctrl: result.scene.ctrl,
        farin: result.scene.farin,
        meta: this.state.scene?.meta,
      }));
    } catch (err) {
      this.setState(optimizerFinished(this.state, []));
      if (!(err instanceof DOMException && err.name === "AbortError")) {
        this.setState(withError(this.state, describe(err)));
      }
      await this.refresh(); // cancelled: scene untouched, just resync
    } finally {
      this.abort = null;
    }
  }
}

const describe = (err: unknown): string => {
  if (err instanceof ApiError) return `${err.code}: ${err.message}`;
  return err instanceof Error ? err.message : String(err);
};

new Editor().boot().catch((err) => {
  const status = document.getElementById("status");
  if (status) status.textContent = describe(err);
  console.error("editor failed to start", err);
});
