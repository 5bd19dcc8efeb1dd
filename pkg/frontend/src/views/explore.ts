/** Explore page: variable pickers and the recommended chart. */

import { renderChart, type ChartData } from "../charts";
import type { SessionStore } from "../store";
import type { PlotResponse } from "../types";

function chartDataFromSpec(plot: PlotResponse): {
  data: ChartData;
} {
  const spec = plot.spec as Record<string, any>;
  const data: ChartData = {};
  const points: [number, number][] | undefined = spec.points;
  if (points && points.length) {
    data.xs = points.map((p) => p[0]);
    data.ys = points.map((p) => p[1]);
  } else if (spec.x_summary?.kind === "numeric") {
    const bins = spec.x_summary.bins;
    data.xs = bins.counts.flatMap((count: number, i: number) =>
      Array(count).fill((bins.edges[i] + bins.edges[i + 1]) / 2),
    );
  }
  if (spec.groups) {
    data.categories = Object.fromEntries(
      Object.entries(spec.groups as Record<string, { mean: number }>).map(
        ([name, g]) => [name, g.mean],
      ),
    );
  } else if (spec.x_summary?.kind === "categorical") {
    data.categories = spec.x_summary.counts;
  }
  return { data };
}

export function renderExplore(root: HTMLElement, store: SessionStore) {
  root.innerHTML = `
    <section class="page" data-page="explore">
      <h2>Explore</h2>
      <label>x <select data-role="x-select"></select></label>
      <label>y <select data-role="y-select"><option value="">(none)</option></select></label>
      <button data-role="heatmap-button">Correlation heatmap</button>
      <p data-role="recommendation"></p>
      <div data-role="chart"></div>
      <div data-role="heatmap"></div>
    </section>
  `;
  const xSelect = root.querySelector<HTMLSelectElement>('[data-role="x-select"]')!;
  const ySelect = root.querySelector<HTMLSelectElement>('[data-role="y-select"]')!;
  const heatmapButton = root.querySelector<HTMLButtonElement>('[data-role="heatmap-button"]')!;

  const onChange = async () => {
    if (!xSelect.value) return;
    await store.selectVariables(xSelect.value, ySelect.value || null);
  };
  xSelect.addEventListener("change", onChange);
  ySelect.addEventListener("change", onChange);
  heatmapButton.addEventListener("click", () => void store.loadHeatmap());

  const disposeHeatmap = renderHeatmapPanel(root, store);
  const disposeMain = store.subscribe((state) => {
    const names = state.columns.map((c) => c.name);
    for (const select of [xSelect, ySelect]) {
      const keep = select === ySelect ? ['<option value="">(none)</option>'] : [];
      const current = select.value;
      select.innerHTML =
        keep.join("") +
        names.map((n) => `<option value="${n}">${n}</option>`).join("");
      if (current && names.includes(current)) select.value = current;
    }
    const label = root.querySelector<HTMLElement>('[data-role="recommendation"]')!;
    const chartBox = root.querySelector<HTMLElement>('[data-role="chart"]')!;
    if (!state.plot) {
      label.textContent = state.sessionId
        ? "Pick a variable to see the recommended plot."
        : "Upload a dataset first.";
      chartBox.replaceChildren();
      return;
    }
    const rec = state.plot.recommendation;
    label.textContent = `Recommended: ${rec.plot_type} (${rec.source}, score ${rec.score.toFixed(2)})`;
    // Chart type on screen always equals the engine's recommendation.
    renderChart(chartBox, rec.plot_type, chartDataFromSpec(state.plot));
  });
  return () => {
    disposeHeatmap();
    disposeMain();
  };
}

function renderHeatmapPanel(root: HTMLElement, store: SessionStore) {
  return store.subscribe((state) => {
    const box = root.querySelector<HTMLElement>('[data-role="heatmap"]');
    if (!box) return;
    if (!state.heatmap) {
      box.replaceChildren();
      return;
    }
    // Axis order follows the engine's hierarchical clustering exactly.
    const { columns, matrix, ordering } = state.heatmap;
    const svg = renderChart(box, "heatmap", { matrix, ordering });
    svg.dataset.columnOrder = ordering.map((i) => columns[i]).join(",");
    const caption = document.createElement("p");
    caption.className = "chart-notice";
    caption.dataset.role = "heatmap-order";
    caption.textContent = `columns: ${ordering.map((i) => columns[i]).join(", ")}`;
    box.appendChild(caption);
  });
}
