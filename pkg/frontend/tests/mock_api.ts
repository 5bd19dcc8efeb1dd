/** In-memory fake of the /v1 session service for network-mock tests.
 *
 * Mirrors the server's optimistic-versioning semantics: every mutation must
 * carry the current version; a mismatch yields 409 StaleVersion and changes
 * nothing. State lives server-side only, so two "tabs" (two stores sharing
 * one MockServer) race exactly like two browsers against the real service.
 */

import type { FetchLike } from "../src/api";
import type {
  OutlierPoint,
  Plan,
  PlotResponse,
  PlotType,
  Profile,
  StepRecord,
} from "../src/types";

function json(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export interface MockOptions {
  profiles?: Profile[];
  plan?: Plan;
  points?: OutlierPoint[];
  plotType?: PlotType;
  rowCount?: number;
}

export const sampleProfile = (name: string, vtype = "continuous"): Profile => ({
  name,
  vtype,
  count: 10,
  missing_count: 0,
  distinct_count: 10,
  shape: "normal",
  mean: 0,
  median: 0,
  mode: 0,
  std: 1,
  skewness: 0,
  kurtosis: 0,
  min: -2,
  max: 2,
});

export const samplePlan = (steps: StepRecord[] = []): Plan => ({
  format: "dataprep-plan",
  version: 1,
  fingerprint: "f".repeat(64),
  seed: 0,
  steps: [
    { id: "s001", op: "profile", params: {}, columns: [], origin: "recommended" },
    ...steps,
  ],
});

export class MockServer {
  version = 0;
  rowCount: number;
  removed: number[][] = [];
  private pointSnapshots: OutlierPoint[][] = [];
  plan: Plan;
  profiles: Profile[];
  points: OutlierPoint[];
  plotType: PlotType;
  requests: { method: string; path: string }[] = [];
  finalized = false;

  constructor(options: MockOptions = {}) {
    this.rowCount = options.rowCount ?? 20;
    this.plan = options.plan ?? samplePlan();
    this.profiles = options.profiles ?? [
      sampleProfile("x"),
      sampleProfile("y"),
      sampleProfile("city", "nominal"),
    ];
    this.points =
      options.points ??
      Array.from({ length: this.rowCount }, (_, i) => ({
        row: i,
        x: i,
        y: i % 7,
        flagged: i >= this.rowCount - 2,
        score: i >= this.rowCount - 2 ? 2.0 : 0.0,
      }));
    this.plotType = options.plotType ?? "scatter_plot";
  }

  private plotResponse(x: string, y: string | null): PlotResponse {
    return {
      version: this.version,
      x,
      y,
      recommendation: { plot_type: this.plotType, source: "svm", score: 0.9 },
      pair: null,
      spec: {
        plot_type: this.plotType,
        x,
        y,
        x_summary: { kind: "numeric", bins: { edges: [0, 1, 2], counts: [3, 4] } },
        points: [
          [0, 1],
          [1, 2],
          [2, 3],
        ],
        groups: { a: { mean: 1, count: 3 }, b: { mean: 2, count: 4 } },
      } as PlotResponse["spec"],
    };
  }

  fetch: FetchLike = async (input, init) => {
    const url = new URL(input, "http://mock");
    const path = url.pathname;
    const method = (init?.method ?? "GET").toUpperCase();
    this.requests.push({ method, path });
    const headers = (init?.headers ?? {}) as Record<string, string>;
    const isJson = (headers["content-type"] ?? "").includes("json");
    const body = isJson && init?.body ? JSON.parse(String(init.body)) : {};

    if (method === "POST" && path === "/v1/sessions") {
      return json(200, {
        session_id: "mock-session",
        version: this.version,
        row_count: this.rowCount,
        column_count: this.profiles.length,
        fingerprint: this.plan.fingerprint,
        columns: this.profiles.map((p) => ({ name: p.name, vtype: p.vtype })),
        profiles: this.profiles,
        plan: this.plan,
        type_inference: { columns: [] },
        preview: [{ x: "1", y: "2", city: "Ames" }],
      });
    }
    if (path.endsWith("columns:retype") && method === "POST") {
      if (body.version !== this.version) {
        return json(409, {
          error: "StaleVersion",
          message: "stale",
          expected_version: this.version,
        });
      }
      this.profiles = this.profiles.map((p) =>
        p.name === body.column ? { ...p, vtype: body.vtype } : p,
      );
      this.version += 1;
      return json(200, {
        session_id: "mock-session",
        version: this.version,
        row_count: this.rowCount,
        column_count: this.profiles.length,
        fingerprint: this.plan.fingerprint,
        columns: this.profiles.map((p) => ({ name: p.name, vtype: p.vtype })),
        profiles: this.profiles,
        plan: this.plan,
        type_inference: { columns: [] },
      });
    }
    if (path.endsWith("/profile")) {
      return json(200, { version: this.version, profiles: this.profiles });
    }
    if (path.endsWith("/plot")) {
      return json(
        200,
        this.plotResponse(url.searchParams.get("x")!, url.searchParams.get("y")),
      );
    }
    if (path.endsWith("/outliers")) {
      return json(200, {
        detector: url.searchParams.get("detector") ?? "dbscan",
        params: { eps: 0.5, min_pts: 5 },
        x: url.searchParams.get("x"),
        y: url.searchParams.get("y"),
        version: this.version,
        points: this.points,
      });
    }
    if (path.endsWith("/correlation")) {
      return json(200, {
        version: this.version,
        columns: ["alpha", "beta", "gamma"],
        matrix: [
          [1, 0.1, 0.9],
          [0.1, 1, 0.2],
          [0.9, 0.2, 1],
        ],
        ordering: [0, 2, 1],
      });
    }
    if (path.endsWith("/plan") && method === "GET") {
      return json(200, { version: this.version, plan: this.plan });
    }
    if (path.endsWith("rows:remove") && method === "POST") {
      if (body.version !== this.version) {
        return json(409, {
          error: "StaleVersion",
          message: `stale snapshot version ${body.version}, server is at ${this.version}`,
          expected_version: this.version,
        });
      }
      const rows: number[] = body.rows;
      this.removed.push(rows);
      this.pointSnapshots.push(this.points);
      this.rowCount -= rows.length;
      this.points = this.points.filter((p) => !rows.includes(p.row));
      this.version += 1;
      this.plan = {
        ...this.plan,
        steps: [
          this.plan.steps[0],
          {
            id: `u${this.version}`,
            op: "drop_rows",
            params: { rows },
            columns: [],
            origin: "user_accepted",
          },
          ...this.plan.steps.slice(1),
        ],
      };
      return json(200, {
        version: this.version,
        row_count: this.rowCount,
        undo_token: this.version - 1,
      });
    }
    if (path.includes("/plan/steps/") && method === "PATCH") {
      if (body.version !== this.version) {
        return json(409, {
          error: "StaleVersion",
          message: "stale",
          expected_version: this.version,
        });
      }
      const stepId = path.split("/").pop()!;
      const index = this.plan.steps.findIndex((s) => s.id === stepId);
      if (index < 0) return json(404, { error: "UnknownStep", message: stepId });
      const steps = [...this.plan.steps];
      if (body.action === "reject") steps.splice(index, 1);
      else if (body.action === "accept")
        steps[index] = { ...steps[index], origin: "user_accepted" };
      else if (body.action === "edit")
        steps[index] = {
          ...steps[index],
          params: { ...steps[index].params, ...body.params },
          origin: "user_edited",
        };
      else if (body.action === "move") {
        const [step] = steps.splice(index, 1);
        steps.splice(body.position, 0, step);
      }
      this.plan = { ...this.plan, steps };
      this.version += 1;
      return json(200, { version: this.version, plan: this.plan });
    }
    if (path.endsWith(":finalize") && method === "POST") {
      if (body.version !== this.version) {
        return json(409, {
          error: "StaleVersion",
          message: "stale",
          expected_version: this.version,
        });
      }
      this.finalized = true;
      this.version += 1;
      return json(200, {
        version: this.version,
        row_count: this.rowCount,
        csv_url: "/v1/sessions/mock-session/export/csv",
        report_url: "/v1/sessions/mock-session/export/report",
      });
    }
    if (path.endsWith(":undo") && method === "POST") {
      if (body.version !== this.version) {
        return json(409, {
          error: "StaleVersion",
          message: "stale",
          expected_version: this.version,
        });
      }
      const last = this.removed.pop() ?? [];
      this.rowCount += last.length;
      const snapshot = this.pointSnapshots.pop();
      if (snapshot) this.points = snapshot;
      this.version += 1;
      return json(200, { version: this.version, row_count: this.rowCount });
    }
    return json(404, { error: "NotFound", message: path });
  };
}
