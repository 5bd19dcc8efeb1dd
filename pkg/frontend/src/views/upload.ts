/** Gather Data page: pick a file, preview rows, review and override types. */

import type { SessionStore } from "../store";

const MAX_UPLOAD_BYTES = 100 * 1024 * 1024;
const VTYPES = ["continuous", "nominal", "ordinal", "datetime", "text"];
const PREVIEW_ROWS = 100;

export function renderUpload(root: HTMLElement, store: SessionStore) {
  root.innerHTML = `
    <section class="page" data-page="gather">
      <h2>Gather Data</h2>
      <p>Upload a CSV to profile it and get a recommended cleaning plan.</p>
      <input type="file" accept=".csv,text/csv" data-role="file-input" />
      <p class="error" data-role="upload-error" hidden></p>
      <div data-role="profile-table"></div>
      <div data-role="preview-table"></div>
    </section>
  `;
  const input = root.querySelector<HTMLInputElement>('[data-role="file-input"]')!;
  const errorBox = root.querySelector<HTMLElement>('[data-role="upload-error"]')!;

  input.addEventListener("change", async () => {
    const file = input.files?.[0];
    if (!file) return;
    if (file.size > MAX_UPLOAD_BYTES) {
      errorBox.textContent = `File is ${file.size} bytes; the cap is ${MAX_UPLOAD_BYTES}.`;
      errorBox.hidden = false;
      return; // no request storm for oversize files
    }
    errorBox.hidden = true;
    await store.upload(file, file.name.replace(/\.csv$/i, ""));
  });

  root.addEventListener("change", (event) => {
    const select = event.target as HTMLSelectElement;
    if (select.dataset.role !== "vtype-override") return;
    void store.retypeColumn(select.dataset.column!, select.value);
  });

  return store.subscribe((state) => {
    if (state.error) {
      errorBox.textContent = state.error;
      errorBox.hidden = false;
    }
    const table = root.querySelector<HTMLElement>('[data-role="profile-table"]')!;
    const previewBox = root.querySelector<HTMLElement>('[data-role="preview-table"]')!;
    if (!state.profiles.length) {
      table.replaceChildren();
      previewBox.replaceChildren();
      return;
    }
    const rows = state.profiles
      .map((p) => {
        const options = VTYPES.map(
          (v) =>
            `<option value="${v}" ${v === p.vtype ? "selected" : ""}>${v}</option>`,
        ).join("");
        return `
        <tr data-column="${p.name}">
          <td>${p.name}</td>
          <td><span class="badge">${p.vtype}</span></td>
          <td><select data-role="vtype-override" data-column="${p.name}">${options}</select></td>
          <td>${p.shape}</td>
          <td>${p.missing_count}</td>
          <td>${p.distinct_count}</td>
        </tr>`;
      })
      .join("");
    table.innerHTML = `
      <p data-role="row-count">${state.rowCount} rows</p>
      <table class="profiles">
        <thead><tr><th>column</th><th>type</th><th>override</th><th>shape</th><th>missing</th><th>distinct</th></tr></thead>
        <tbody>${rows}</tbody>
      </table>
    `;
    if (state.preview.length) {
      const names = state.columns.map((c) => c.name);
      const header = names.map((n) => `<th>${n}</th>`).join("");
      const body = state.preview
        .slice(0, PREVIEW_ROWS)
        .map(
          (row) =>
            `<tr>${names
              .map((n) => `<td>${row[n] ?? "<span class=\"badge\">missing</span>"}</td>`)
              .join("")}</tr>`,
        )
        .join("");
      previewBox.innerHTML = `
        <h3>Preview (first ${Math.min(PREVIEW_ROWS, state.preview.length)} rows)</h3>
        <div class="preview-scroll">
          <table class="profiles preview"><thead><tr>${header}</tr></thead><tbody>${body}</tbody></table>
        </div>
      `;
    }
  });
}
