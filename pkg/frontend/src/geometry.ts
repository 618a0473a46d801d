/** Screen-space geometry: the top view is an axis-pair projection of the
 * 3-space frames followed by a similarity (uniform scale + translation), so
 * rendered glyphs stay congruent at every zoom level. */

export interface Vec2 {
  x: number;
  y: number;
}

export type Vec3 = [number, number, number];

/** Which two coordinates of 3-space span the view plane. */
export type AxisPair = [0 | 1 | 2, 0 | 1 | 2];

export interface ViewTransform {
  centerX: number;
  centerY: number;
  /** pixels per world unit; strictly positive */
  scale: number;
  axes: AxisPair;
}

export const DEFAULT_VIEW: ViewTransform = {
  centerX: 0,
  centerY: 0.8,
  scale: 80,
  axes: [0, 1],
};

export const project = (p: Vec3, axes: AxisPair): Vec2 => ({
  x: p[axes[0]],
  y: p[axes[1]],
});

export const worldToScreen = (
  p: Vec2,
  view: ViewTransform,
  width: number,
  height: number,
): Vec2 => ({
  x: width / 2 + (p.x - view.centerX) * view.scale,
  y: height / 2 - (p.y - view.centerY) * view.scale,
});

export const screenToWorld = (
  p: Vec2,
  view: ViewTransform,
  width: number,
  height: number,
): Vec2 => ({
  x: view.centerX + (p.x - width / 2) / view.scale,
  y: view.centerY - (p.y - height / 2) / view.scale,
});

export const frameToScreen = (
  origin: Vec3,
  view: ViewTransform,
  width: number,
  height: number,
): Vec2 => worldToScreen(project(origin, view.axes), view, width, height);

export const distance = (a: Vec2, b: Vec2): number =>
  Math.hypot(a.x - b.x, a.y - b.y);

const segmentDistance = (p: Vec2, a: Vec2, b: Vec2): number => {
  const vx = b.x - a.x;
  const vy = b.y - a.y;
  const len2 = vx * vx + vy * vy;
  if (len2 === 0) return distance(p, a);
  let u = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
  u = Math.max(0, Math.min(1, u));
  return distance(p, { x: a.x + u * vx, y: a.y + u * vy });
};

export const distanceToPolyline = (p: Vec2, poly: Vec2[]): number => {
  if (poly.length === 0) return Number.POSITIVE_INFINITY;
  if (poly.length === 1) return distance(p, poly[0]);
  let best = Number.POSITIVE_INFINITY;
  for (let i = 0; i + 1 < poly.length; i += 1) {
    best = Math.min(best, segmentDistance(p, poly[i], poly[i + 1]));
  }
  return best;
};

/** Parameter of the closest polyline vertex; used to map a drag position
 * back onto a constrained handle track. */
export const closestVertexIndex = (p: Vec2, poly: Vec2[]): number => {
  let best = 0;
  let bestD = Number.POSITIVE_INFINITY;
  poly.forEach((q, i) => {
    const d = distance(p, q);
    if (d < bestD) {
      bestD = d;
      best = i;
    }
  });
  return best;
};
