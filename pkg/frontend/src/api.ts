/** Typed client for the session service /v1 API.
 *
 * The fetch implementation is injectable so tests can mock the network; the
 * UI itself never computes statistics, every number it shows comes from
 * these responses.
 */

import type {
  ApiError,
  FinalizeResult,
  OutlierResponse,
  Plan,
  PlotResponse,
  Profile,
  RemoveResult,
  SessionCreated,
} from "./types";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function fail(response: Response): Promise<never> {
  let payload: ApiError["payload"] = {};
  try {
    payload = await response.json();
  } catch {
    /* non-JSON error body */
  }
  const error = new Error(
    payload.message ?? `request failed: ${response.status}`,
  ) as ApiError;
  error.status = response.status;
  error.payload = payload;
  throw error;
}

export function isStaleVersion(error: unknown): error is ApiError {
  return (
    typeof error === "object" &&
    error !== null &&
    (error as ApiError).status === 409 &&
    (error as ApiError).payload?.error === "StaleVersion"
  );
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(this.base + path);
    if (!response.ok) await fail(response);
    return response.json() as Promise<T>;
  }

  private async send<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(this.base + path, {
      method,
      headers: { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) await fail(response);
    return response.json() as Promise<T>;
  }

  async createSession(csv: string | Blob, name?: string): Promise<SessionCreated> {
    const query = name ? `?name=${encodeURIComponent(name)}` : "";
    const response = await this.fetchImpl(`${this.base}/v1/sessions${query}`, {
      method: "POST",
      headers: { "content-type": "text/csv" },
      body: csv,
    });
    if (!response.ok) await fail(response);
    return response.json() as Promise<SessionCreated>;
  }

  getProfiles(sid: string) {
    return this.get<{ version: number; profiles: Profile[] }>(
      `/v1/sessions/${sid}/profile`,
    );
  }

  getPlot(sid: string, x: string, y?: string | null) {
    const query = y ? `?x=${encodeURIComponent(x)}&y=${encodeURIComponent(y)}` : `?x=${encodeURIComponent(x)}`;
    return this.get<PlotResponse>(`/v1/sessions/${sid}/plot${query}`);
  }

  getOutliers(sid: string, x: string, y: string, detector = "dbscan") {
    const query = `?x=${encodeURIComponent(x)}&y=${encodeURIComponent(y)}&detector=${detector}`;
    return this.get<OutlierResponse>(`/v1/sessions/${sid}/outliers${query}`);
  }

  getCorrelation(sid: string) {
    return this.get<{
      version: number;
      columns: string[];
      matrix: number[][];
      ordering: number[];
    }>(`/v1/sessions/${sid}/correlation`);
  }

  getPlan(sid: string) {
    return this.get<{ version: number; plan: Plan }>(`/v1/sessions/${sid}/plan`);
  }

  removeRows(sid: string, version: number, rows: number[]) {
    return this.send<RemoveResult>("POST", `/v1/sessions/${sid}/rows:remove`, {
      version,
      rows,
    });
  }

  patchStep(
    sid: string,
    version: number,
    stepId: string,
    action: "accept" | "reject" | "edit" | "move",
    params?: Record<string, unknown>,
    position?: number,
  ) {
    return this.send<{ version: number; plan: Plan }>(
      "PATCH",
      `/v1/sessions/${sid}/plan/steps/${stepId}`,
      { version, action, params, position },
    );
  }

  retypeColumn(sid: string, version: number, column: string, vtype: string) {
    return this.send<SessionCreated>("POST", `/v1/sessions/${sid}/columns:retype`, {
      version,
      column,
      vtype,
    });
  }

  undo(sid: string, version: number) {
    return this.send<{ version: number; row_count: number }>(
      "POST",
      `/v1/sessions/${sid}:undo`,
      { version },
    );
  }

  finalize(sid: string, version: number) {
    return this.send<FinalizeResult>("POST", `/v1/sessions/${sid}:finalize`, {
      version,
    });
  }

  async download(path: string): Promise<string> {
    const response = await this.fetchImpl(this.base + path);
    if (!response.ok) await fail(response);
    return response.text();
  }
}
