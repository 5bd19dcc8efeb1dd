/** Gather Data page: profile table, preview, type-override dropdowns. */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { SessionStore } from "../src/store";
import { renderUpload } from "../src/views/upload";
import { MockServer } from "./mock_api";

describe("upload page", () => {
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = '<div id="root"></div>';
    root = document.getElementById("root")!;
  });

  it("renders the profile table and preview after upload", async () => {
    const server = new MockServer();
    const store = new SessionStore(new ApiClient("", server.fetch));
    renderUpload(root, store);
    await store.upload("x,y,city\n1,2,Ames\n");
    expect(root.querySelectorAll("table.profiles tbody tr").length).toBeGreaterThan(2);
    expect(root.querySelector('[data-role="row-count"]')!.textContent).toContain("20");
    expect(root.querySelector("table.preview")).not.toBeNull();
  });

  it("type override dropdown round-trips through the API", async () => {
    const server = new MockServer();
    const store = new SessionStore(new ApiClient("", server.fetch));
    renderUpload(root, store);
    await store.upload("x,y,city\n1,2,Ames\n");
    const select = root.querySelector<HTMLSelectElement>(
      'select[data-column="city"]',
    )!;
    expect(select.value).toBe("nominal");
    select.value = "text";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    await new Promise((r) => setTimeout(r, 0));
    expect(server.requests.some((r) => r.path.endsWith("columns:retype"))).toBe(true);
    expect(store.state.profiles.find((p) => p.name === "city")!.vtype).toBe("text");
  });

  it("upload errors surface inline", async () => {
    const server = new MockServer();
    const failing = new ApiClient("", async () => {
      return new Response(
        JSON.stringify({ error: "MalformedCsv", message: "row 2 has 1 fields, expected 2", row: 2 }),
        { status: 400, headers: { "content-type": "application/json" } },
      );
    });
    void server;
    const store = new SessionStore(failing);
    renderUpload(root, store);
    await store.upload("a,b\n1,2\n3\n");
    const error = root.querySelector<HTMLElement>('[data-role="upload-error"]')!;
    expect(error.hidden).toBe(false);
    expect(error.textContent).toContain("row 2");
  });
});
