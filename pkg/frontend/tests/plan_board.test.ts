/** Plan board: accept/edit/reject/reorder cards, finalize, export links. */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { SessionStore } from "../src/store";
import { renderPlanBoard } from "../src/views/plan";
import { MockServer, samplePlan } from "./mock_api";
import type { StepRecord } from "../src/types";

const EXTRA_STEPS: StepRecord[] = [
  { id: "s002", op: "impute", params: { strategy: "mean" }, columns: ["x"], origin: "recommended" },
  { id: "s003", op: "winsorize", params: { lo_pct: 5, hi_pct: 95 }, columns: ["x"], origin: "recommended" },
  { id: "s004", op: "zscore", params: {}, columns: ["y"], origin: "propagated", provenance: { from: "x", distance: 0.05, metric: "cosine" } },
];

describe("plan board", () => {
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = '<div id="root"></div>';
    root = document.getElementById("root")!;
  });

  async function setup() {
    const server = new MockServer({ plan: samplePlan(EXTRA_STEPS) });
    const store = new SessionStore(new ApiClient("", server.fetch));
    renderPlanBoard(root, store);
    await store.upload("x,y\n1,2\n");
    return { server, store };
  }

  it("renders cards with origin badges", async () => {
    await setup();
    const cards = root.querySelectorAll(".step-card");
    expect(cards.length).toBe(4);
    expect(root.querySelector(".origin-propagated")).not.toBeNull();
    const propagated = root.querySelector('[data-step-id="s004"]')!;
    expect(propagated.querySelector(".provenance")!.textContent).toContain("from x");
  });

  it("reject removes the card after server ack", async () => {
    const { store } = await setup();
    await store.patchStep("s003", "reject");
    expect(root.querySelector('[data-step-id="s003"]')).toBeNull();
    expect(store.state.plan!.steps.map((s) => s.id)).toEqual(["s001", "s002", "s004"]);
  });

  it("edit round-trips through the server and shows user_edited", async () => {
    const { store } = await setup();
    await store.patchStep("s003", "edit", { lo_pct: 1 });
    const card = root.querySelector('[data-step-id="s003"]')!;
    expect(card.querySelector(".origin-user_edited")).not.toBeNull();
    const step = store.state.plan!.steps.find((s) => s.id === "s003")!;
    expect(step.params.lo_pct).toBe(1);
  });

  it("reorder changes the step order used by finalize", async () => {
    const { server, store } = await setup();
    await store.patchStep("s004", "move", undefined, 1);
    expect(store.state.plan!.steps.map((s) => s.id)).toEqual([
      "s001",
      "s004",
      "s002",
      "s003",
    ]);
    await store.finalize();
    expect(server.finalized).toBe(true);
    expect(server.plan.steps.map((s) => s.id)).toEqual(["s001", "s004", "s002", "s003"]);
  });

  it("finalize exposes export links", async () => {
    const { store } = await setup();
    await store.finalize();
    const csv = root.querySelector<HTMLAnchorElement>('[data-role="csv-link"]')!;
    const report = root.querySelector<HTMLAnchorElement>('[data-role="report-link"]')!;
    expect(csv.getAttribute("href")).toContain("/export/csv");
    expect(report.getAttribute("href")).toContain("/export/report");
  });
});
