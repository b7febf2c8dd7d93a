// Client-side rendering of the service's graph geometry. The service sends
// resolved pixel positions; this module only turns them into markup.

import type { GraphSpecJson } from "./types.js";

const WINDOW_PX = 100; // one shading window = one second at detail scale

export function svgForGraph(spec: GraphSpecJson): string {
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${spec.width}" ` +
      `height="${spec.height}" viewBox="0 0 ${spec.width} ${spec.height}">`,
  ];
  for (const [index, darkness] of spec.shading) {
    const x = index * WINDOW_PX;
    const w = Math.min(WINDOW_PX, Math.max(0, spec.width - x));
    const gray = 255 - Math.round(darkness * 255);
    parts.push(
      `<rect x="${x}" y="0" width="${w}" height="${spec.height}" ` +
        `fill="rgb(${gray},${gray},${gray})"/>`,
    );
  }
  const points = spec.points.map(([x, y]) => `${x.toFixed(2)},${y.toFixed(2)}`).join(" ");
  parts.push(
    `<polyline fill="none" stroke="#1f6ef2" stroke-width="1.5" points="${points}"/>`,
  );
  for (const [x, second] of spec.ticks) {
    parts.push(
      `<line x1="${x}" y1="${spec.height - 6}" x2="${x}" y2="${spec.height}" ` +
        `stroke="#444" stroke-width="1"/>`,
      `<text x="${x + 2}" y="${spec.height - 2}" font-size="8" fill="#444">${second}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

/**
 * Fit detail points into a thumbnail box: x rescaled to span the full box
 * width, y rescaled proportionally. The list view uses this so every climb
 * shows its whole shape at a glance.
 */
export function thumbnailSvg(
  points: [number, number][],
  sourceHeight: number,
  boxWidth: number,
  boxHeight: number,
): string {
  if (points.length === 0) {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${boxWidth}" height="${boxHeight}"></svg>`;
  }
  const maxX = points[points.length - 1][0];
  const scaleX = maxX > 0 ? boxWidth / maxX : 0;
  const scaleY = boxHeight / sourceHeight;
  const mapped = points
    .map(([x, y]) => `${(x * scaleX).toFixed(2)},${(y * scaleY).toFixed(2)}`)
    .join(" ");
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${boxWidth}" height="${boxHeight}" ` +
    `viewBox="0 0 ${boxWidth} ${boxHeight}">` +
    `<polyline fill="none" stroke="#1f6ef2" stroke-width="1" points="${mapped}"/></svg>`
  );
}
