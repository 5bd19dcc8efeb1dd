/** Minimal SVG chart rendering driven entirely by engine plot specs.
 *
 * The rendered root carries data-chart-type equal to the engine's
 * recommendation; alluvial plots draw a bar-style fallback (with a notice)
 * but keep their recommended type visible to the user and to tests.
 */

import type { OutlierPoint, PlotType } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 420;
const HEIGHT = 260;
const PAD = 28;

function svgRoot(chartType: PlotType): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("width", String(WIDTH));
  svg.setAttribute("height", String(HEIGHT));
  svg.dataset.chartType = chartType;
  return svg;
}

function mark(svg: SVGSVGElement, tag: string, attrs: Record<string, string | number>) {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  svg.appendChild(node);
  return node;
}

export interface ChartData {
  /** numeric series (histograms, lines, scatters) */
  xs?: number[];
  ys?: number[];
  /** category -> value (bar, pie, violin group means) */
  categories?: Record<string, number>;
}

function scale(values: number[], lo: number, hi: number) {
  const min = Math.min(...values);
  const max = Math.max(...values);
  const span = max - min || 1;
  return (v: number) => lo + ((v - min) / span) * (hi - lo);
}

function drawScatter(svg: SVGSVGElement, xs: number[], ys: number[]) {
  const sx = scale(xs, PAD, WIDTH - PAD);
  const sy = scale(ys, HEIGHT - PAD, PAD);
  xs.forEach((x, i) =>
    mark(svg, "circle", { cx: sx(x), cy: sy(ys[i]), r: 3, class: "pt" }),
  );
}

function drawBars(svg: SVGSVGElement, categories: Record<string, number>) {
  const entries = Object.entries(categories);
  const sy = scale([0, ...entries.map(([, v]) => v)], HEIGHT - PAD, PAD);
  const band = (WIDTH - 2 * PAD) / Math.max(entries.length, 1);
  entries.forEach(([name, value], i) => {
    mark(svg, "rect", {
      x: PAD + i * band + 2,
      y: sy(value),
      width: Math.max(band - 4, 1),
      height: HEIGHT - PAD - sy(value),
      class: "bar",
      "data-category": name,
    });
  });
}

function drawHistogram(svg: SVGSVGElement, xs: number[]) {
  const bins = 12;
  const min = Math.min(...xs);
  const max = Math.max(...xs);
  const span = max - min || 1;
  const counts = new Array(bins).fill(0);
  for (const x of xs) {
    const b = Math.min(bins - 1, Math.floor(((x - min) / span) * bins));
    counts[b] += 1;
  }
  const categories: Record<string, number> = {};
  counts.forEach((c, i) => (categories[`b${i}`] = c));
  drawBars(svg, categories);
}

function drawLine(svg: SVGSVGElement, xs: number[], ys: number[]) {
  const order = xs.map((_, i) => i).sort((a, b) => xs[a] - xs[b]);
  const sx = scale(xs, PAD, WIDTH - PAD);
  const sy = scale(ys, HEIGHT - PAD, PAD);
  const path = order
    .map((i, k) => `${k === 0 ? "M" : "L"}${sx(xs[i])},${sy(ys[i])}`)
    .join(" ");
  mark(svg, "path", { d: path, fill: "none", class: "line" });
}

function drawPie(svg: SVGSVGElement, categories: Record<string, number>) {
  const total = Object.values(categories).reduce((a, b) => a + b, 0) || 1;
  const cx = WIDTH / 2;
  const cy = HEIGHT / 2;
  const r = Math.min(WIDTH, HEIGHT) / 2 - PAD;
  let angle = -Math.PI / 2;
  for (const [name, value] of Object.entries(categories)) {
    const sweep = (value / total) * Math.PI * 2;
    const x1 = cx + r * Math.cos(angle);
    const y1 = cy + r * Math.sin(angle);
    angle += sweep;
    const x2 = cx + r * Math.cos(angle);
    const y2 = cy + r * Math.sin(angle);
    mark(svg, "path", {
      d: `M${cx},${cy} L${x1},${y1} A${r},${r} 0 ${sweep > Math.PI ? 1 : 0} 1 ${x2},${y2} Z`,
      class: "slice",
      "data-category": name,
    });
  }
}

function drawViolin(svg: SVGSVGElement, categories: Record<string, number>) {
  // Stylized per-group densities around each category's center line.
  const entries = Object.entries(categories);
  const band = (WIDTH - 2 * PAD) / Math.max(entries.length, 1);
  entries.forEach(([name, value], i) => {
    const cx = PAD + i * band + band / 2;
    mark(svg, "ellipse", {
      cx,
      cy: HEIGHT / 2,
      rx: Math.max(band / 4, 4),
      ry: Math.max(20, Math.min(value, HEIGHT / 2 - PAD)),
      class: "violin",
      "data-category": name,
    });
  });
}

function drawBox(svg: SVGSVGElement, xs: number[]) {
  const sorted = [...xs].sort((a, b) => a - b);
  const q = (p: number) => sorted[Math.floor((sorted.length - 1) * p)];
  const sx = scale(sorted, PAD, WIDTH - PAD);
  const mid = HEIGHT / 2;
  mark(svg, "line", { x1: sx(sorted[0]), y1: mid, x2: sx(sorted[sorted.length - 1]), y2: mid, class: "whisker" });
  mark(svg, "rect", { x: sx(q(0.25)), y: mid - 30, width: Math.max(sx(q(0.75)) - sx(q(0.25)), 1), height: 60, class: "box" });
  mark(svg, "line", { x1: sx(q(0.5)), y1: mid - 30, x2: sx(q(0.5)), y2: mid + 30, class: "median" });
}

function drawHeatmap(svg: SVGSVGElement, matrix: number[][], ordering?: number[]) {
  const n = matrix.length;
  const order = ordering && ordering.length === n ? ordering : matrix.map((_, i) => i);
  const cell = Math.min((WIDTH - 2 * PAD) / n, (HEIGHT - 2 * PAD) / n);
  order.forEach((row, i) => {
    order.forEach((col, j) => {
      const value = matrix[row][col];
      const tone = Math.round(255 * (1 - Math.abs(value)));
      mark(svg, "rect", {
        x: PAD + j * cell,
        y: PAD + i * cell,
        width: cell,
        height: cell,
        fill: value >= 0 ? `rgb(${tone},${tone},255)` : `rgb(255,${tone},${tone})`,
        "data-row": row,
        "data-col": col,
      });
    });
  });
}

export interface RenderOptions {
  data?: ChartData;
  matrix?: number[][];
  ordering?: number[];
}

export function renderChart(
  container: HTMLElement,
  chartType: PlotType,
  options: RenderOptions = {},
): SVGSVGElement {
  container.replaceChildren();
  const svg = svgRoot(chartType);
  const { data = {}, matrix, ordering } = options;
  const xs = data.xs ?? [];
  const ys = data.ys ?? [];
  const categories = data.categories ?? {};

  switch (chartType) {
    case "scatter_plot":
      drawScatter(svg, xs, ys);
      break;
    case "line_graph":
      drawLine(svg, xs, ys);
      break;
    case "histogram":
      drawHistogram(svg, xs);
      break;
    case "bar_chart":
      drawBars(svg, categories);
      break;
    case "pie_chart":
      drawPie(svg, categories);
      break;
    case "violin_plot":
      drawViolin(svg, categories);
      break;
    case "box_plot":
      drawBox(svg, xs);
      break;
    case "heatmap":
      drawHeatmap(svg, matrix ?? [[1]], ordering);
      break;
    case "alluvial_plot": {
      // v1 renders a bar fallback; the recommended type stays visible.
      svg.dataset.fallback = "bar_chart";
      drawBars(svg, categories);
      const note = document.createElement("p");
      note.className = "chart-notice";
      note.textContent = "Alluvial view coming soon; showing a bar summary.";
      container.appendChild(note);
      break;
    }
  }
  container.appendChild(svg);
  return svg;
}

/** Fig-1-style outlier scatter: flagged points accented, selection stroked. */
export function renderOutlierScatter(
  container: HTMLElement,
  points: OutlierPoint[],
  selection: Set<number>,
  onToggle: (row: number) => void,
): SVGSVGElement {
  container.replaceChildren();
  const svg = svgRoot("scatter_plot");
  svg.dataset.role = "outlier-editor";
  const xs = points.map((p) => p.x ?? 0);
  const ys = points.map((p) => p.y ?? 0);
  const sx = scale(xs, PAD, WIDTH - PAD);
  const sy = scale(ys, HEIGHT - PAD, PAD);
  for (const point of points) {
    const node = mark(svg, "circle", {
      cx: sx(point.x ?? 0),
      cy: sy(point.y ?? 0),
      r: point.flagged ? 5 : 3,
      class: point.flagged ? "pt flagged" : "pt inlier",
      "data-row": point.row,
    });
    if (selection.has(point.row)) node.classList.add("selected");
    node.addEventListener("click", () => onToggle(point.row));
  }
  container.appendChild(svg);
  return svg;
}
