/** Clean page: the interactive outlier editor.
 *
 * Flagged points render with the accent style; clicking toggles selection
 * (stroke); "remove selected" commits through the optimistic version guard.
 */

import { renderOutlierScatter } from "../charts";
import type { SessionStore } from "../store";

export function renderClean(root: HTMLElement, store: SessionStore) {
  root.innerHTML = `
    <section class="page" data-page="clean">
      <h2>Clean</h2>
      <label>x <select data-role="ox-select"></select></label>
      <label>y <select data-role="oy-select"></select></label>
      <label>detector
        <select data-role="detector-select">
          <option value="dbscan">dbscan</option>
          <option value="isolation_forest">isolation forest</option>
          <option value="lof">lof</option>
          <option value="iqr">iqr</option>
        </select>
      </label>
      <button data-role="load-outliers">Detect</button>
      <p data-role="status"></p>
      <div data-role="scatter"></div>
      <button data-role="remove-selected" disabled>Remove selected</button>
      <button data-role="undo">Undo</button>
      <p class="notice" data-role="notice" hidden></p>
    </section>
  `;
  const xSelect = root.querySelector<HTMLSelectElement>('[data-role="ox-select"]')!;
  const ySelect = root.querySelector<HTMLSelectElement>('[data-role="oy-select"]')!;
  const detector = root.querySelector<HTMLSelectElement>('[data-role="detector-select"]')!;
  const loadButton = root.querySelector<HTMLButtonElement>('[data-role="load-outliers"]')!;
  const removeButton = root.querySelector<HTMLButtonElement>('[data-role="remove-selected"]')!;
  const undoButton = root.querySelector<HTMLButtonElement>('[data-role="undo"]')!;

  loadButton.addEventListener("click", () => {
    if (xSelect.value && ySelect.value) {
      void store.loadOutliers(xSelect.value, ySelect.value, detector.value);
    }
  });
  removeButton.addEventListener("click", () => void store.commitRemoval());
  undoButton.addEventListener("click", () => void store.undo());

  return store.subscribe((state) => {
    const numeric = state.columns.filter((c) =>
      ["continuous", "datetime"].includes(c.vtype),
    );
    for (const select of [xSelect, ySelect]) {
      const current = select.value;
      select.innerHTML = numeric
        .map((c) => `<option value="${c.name}">${c.name}</option>`)
        .join("");
      if (current && numeric.some((c) => c.name === current)) select.value = current;
    }
    const status = root.querySelector<HTMLElement>('[data-role="status"]')!;
    const scatter = root.querySelector<HTMLElement>('[data-role="scatter"]')!;
    const notice = root.querySelector<HTMLElement>('[data-role="notice"]')!;
    notice.hidden = !state.notice;
    if (state.notice) notice.textContent = state.notice;

    if (!state.outliers) {
      status.textContent = state.sessionId
        ? `${state.rowCount} rows. Choose two numeric axes and detect.`
        : "Upload a dataset first.";
      scatter.replaceChildren();
      removeButton.disabled = true;
      return;
    }
    const flagged = state.outliers.points.filter((p) => p.flagged).length;
    status.textContent =
      `${state.rowCount} rows, ${flagged} flagged by ${state.outliers.detector}, ` +
      `${state.selection.size} selected`;
    status.dataset.rowCount = String(state.rowCount);
    renderOutlierScatter(scatter, state.outliers.points, state.selection, (row) =>
      store.toggleSelection(row),
    );
    removeButton.disabled = state.selection.size === 0;
  });
}
