/** Click-to-remove: selection toggling, commit, count agreement, races. */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { SessionStore } from "../src/store";
import { renderClean } from "../src/views/clean";
import { MockServer } from "./mock_api";

function clickPoint(root: HTMLElement, row: number) {
  const node = root.querySelector<SVGCircleElement>(`circle[data-row="${row}"]`);
  expect(node, `point ${row} rendered`).not.toBeNull();
  node!.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

describe("outlier editor", () => {
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = '<div id="root"></div>';
    root = document.getElementById("root")!;
  });

  async function setup(server: MockServer) {
    const store = new SessionStore(new ApiClient("", server.fetch));
    renderClean(root, store);
    await store.upload("x,y\n1,2\n");
    await store.loadOutliers("x", "y");
    return store;
  }

  it("flagged points render with the accent class", async () => {
    const server = new MockServer();
    await setup(server);
    const flagged = root.querySelectorAll("circle.flagged");
    expect(flagged.length).toBe(2);
    const inliers = root.querySelectorAll("circle.inlier");
    expect(inliers.length).toBe(server.points.length - 2);
  });

  it("click toggles selection; remove commits and counts agree", async () => {
    const server = new MockServer();
    const store = await setup(server);
    const flaggedRow = server.points.find((p) => p.flagged)!.row;
    clickPoint(root, flaggedRow);
    expect(store.state.selection.has(flaggedRow)).toBe(true);
    expect(
      root.querySelector(`circle[data-row="${flaggedRow}"]`)!.classList.contains("selected"),
    ).toBe(true);

    const before = store.state.rowCount;
    await store.commitRemoval();
    // displayed and server row counts decrease identically
    expect(server.rowCount).toBe(before - 1);
    expect(store.state.rowCount).toBe(server.rowCount);
    const status = root.querySelector<HTMLElement>('[data-role="status"]')!;
    expect(status.dataset.rowCount).toBe(String(server.rowCount));
    // the removed point is gone from the refreshed scatter
    expect(root.querySelector(`circle[data-row="${flaggedRow}"]`)).toBeNull();
    // plan gained a user-accepted drop step
    const dropSteps = store.state.plan!.steps.filter((s) => s.op === "drop_rows");
    expect(dropSteps.length).toBe(1);
    expect(dropSteps[0].origin).toBe("user_accepted");
  });

  it("commit with zero selected sends no request", async () => {
    const server = new MockServer();
    const store = await setup(server);
    const requestsBefore = server.requests.length;
    await store.commitRemoval();
    expect(server.requests.length).toBe(requestsBefore);
  });

  it("two tabs racing: exactly one StaleVersion, loser replays nothing", async () => {
    const server = new MockServer();
    // two browser tabs = two stores sharing one server
    const tabA = new SessionStore(new ApiClient("", server.fetch));
    const tabB = new SessionStore(new ApiClient("", server.fetch));
    for (const tab of [tabA, tabB]) {
      await tab.upload("x,y\n1,2\n");
      await tab.loadOutliers("x", "y");
    }
    tabA.toggleSelection(0);
    tabB.toggleSelection(1);
    await Promise.all([tabA.commitRemoval(), tabB.commitRemoval()]);

    // exactly one removal landed
    expect(server.removed.length).toBe(1);
    expect(server.rowCount).toBe(19);
    const notices = [tabA.state.notice, tabB.state.notice].filter(Boolean);
    expect(notices.length).toBe(1);
    const staleTab = tabA.state.notice ? tabA : tabB;
    // the losing tab refetched and replayed nothing
    expect(staleTab.state.selection.size).toBe(0);
    expect(staleTab.state.version).toBe(server.version);
    expect(staleTab.state.rowCount).toBe(server.rowCount);
  });

  it("undo restores the row count", async () => {
    const server = new MockServer();
    const store = await setup(server);
    store.toggleSelection(0);
    await store.commitRemoval();
    expect(server.rowCount).toBe(19);
    await store.undo();
    expect(store.state.rowCount).toBe(20);
  });
});
