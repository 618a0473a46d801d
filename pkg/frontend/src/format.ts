/** Height labels: parenthesized decimals, full precision in the tooltip,
 * exact fractions when the scene metadata records them. */

export const heightLabel = (height: number): string => {
  const rounded = Math.round(height * 100) / 100;
  const text = Number.isInteger(rounded) ? String(rounded) : rounded.toFixed(2);
  return `(${text === "-0" ? "0" : text})`;
};

export const heightTooltip = (
  height: number,
  meta: Record<string, unknown> | undefined,
  controlIndex?: number,
): string => {
  if (controlIndex !== undefined && meta) {
    const fractions = meta["height_fractions"];
    if (fractions && typeof fractions === "object") {
      const exact = (fractions as Record<string, unknown>)[String(controlIndex)];
      if (typeof exact === "string") return exact;
    }
  }
  return String(height);
};

export const excursionReadout = (value: number | null): string =>
  value === null ? "excursion: –" : `excursion: ${value.toFixed(6)}`;
