/** Plan board: step cards with accept/edit/reject/reorder, then finalize. */

import type { SessionStore } from "../store";
import type { StepRecord } from "../types";

function stepCard(step: StepRecord, index: number, total: number): string {
  const params = Object.entries(step.params ?? {})
    .map(([k, v]) => `${k}=${JSON.stringify(v)}`)
    .join(", ");
  const origin = `<span class="badge origin-${step.origin}">${step.origin}</span>`;
  const provenance = step.provenance
    ? `<span class="provenance">from ${step.provenance.from}</span>`
    : "";
  return `
    <li class="step-card" data-step-id="${step.id}" data-op="${step.op}">
      <header>${step.op} ${origin} ${provenance}</header>
      <p class="cols">${step.columns.join(", ") || "(whole dataset)"}</p>
      <p class="params">${params}</p>
      <p class="step-error" data-role="step-error" hidden></p>
      <button data-action="accept">accept</button>
      <button data-action="reject">reject</button>
      <button data-action="edit">edit</button>
      <button data-action="up" ${index === 0 ? "disabled" : ""}>up</button>
      <button data-action="down" ${index === total - 1 ? "disabled" : ""}>down</button>
    </li>
  `;
}

export function renderPlanBoard(root: HTMLElement, store: SessionStore) {
  root.innerHTML = `
    <section class="page" data-page="plan">
      <h2>Plan</h2>
      <ol class="plan-steps" data-role="steps"></ol>
      <button data-role="finalize">Finalize</button>
      <div data-role="exports"></div>
      <div class="violations" data-role="violations" hidden></div>
    </section>
  `;
  const list = root.querySelector<HTMLElement>('[data-role="steps"]')!;
  const finalizeButton = root.querySelector<HTMLButtonElement>('[data-role="finalize"]')!;
  const exportsBox = root.querySelector<HTMLElement>('[data-role="exports"]')!;
  const violationsBox = root.querySelector<HTMLElement>('[data-role="violations"]')!;

  list.addEventListener("click", async (event) => {
    const button = (event.target as HTMLElement).closest("button");
    if (!button) return;
    const card = button.closest<HTMLElement>("[data-step-id]");
    if (!card) return;
    const stepId = card.dataset.stepId!;
    const action = button.dataset.action!;
    const steps = store.state.plan?.steps ?? [];
    const index = steps.findIndex((s) => s.id === stepId);
    try {
      if (action === "accept" || action === "reject") {
        await store.patchStep(stepId, action);
      } else if (action === "edit") {
        const current = JSON.stringify(steps[index]?.params ?? {});
        const raw = window.prompt("Step parameters (JSON)", current);
        if (raw !== null) await store.patchStep(stepId, "edit", JSON.parse(raw));
      } else if (action === "up" && index > 0) {
        await store.patchStep(stepId, "move", undefined, index - 1);
      } else if (action === "down" && index < steps.length - 1) {
        await store.patchStep(stepId, "move", undefined, index + 1);
      }
    } catch {
      /* errors surface through store.state.error */
    }
    if (store.state.error) {
      const slot = card.querySelector<HTMLElement>('[data-role="step-error"]');
      if (slot) {
        slot.textContent = store.state.error;
        slot.hidden = false;
      }
    }
  });

  finalizeButton.addEventListener("click", async () => {
    const result = await store.finalize();
    if (!result && store.state.error) {
      violationsBox.hidden = false;
      violationsBox.textContent = store.state.error;
    }
  });

  return store.subscribe((state) => {
    const steps = state.plan?.steps ?? [];
    list.innerHTML = steps.map((s, i) => stepCard(s, i, steps.length)).join("");
    if (state.exportUrls) {
      exportsBox.innerHTML = `
        <a data-role="csv-link" href="${state.exportUrls.csv}" download>cleaned CSV</a>
        <a data-role="report-link" href="${state.exportUrls.report}" download>report</a>
      `;
      violationsBox.hidden = true;
    } else {
      exportsBox.replaceChildren();
    }
  });
}
