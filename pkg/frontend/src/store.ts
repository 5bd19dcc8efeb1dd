/** Headless session state and actions; views subscribe and render.
 *
 * The store mirrors the server: the snapshot version always echoes the last
 * response, and a 409 on any mutation triggers a refetch without replaying
 * the attempted change.
 */

import { ApiClient, isStaleVersion } from "./api";
import type {
  ColumnInfo,
  OutlierResponse,
  Plan,
  PlotResponse,
  Profile,
} from "./types";

export interface UiSessionState {
  sessionId: string | null;
  version: number;
  rowCount: number;
  columns: ColumnInfo[];
  profiles: Profile[];
  preview: Record<string, string | null>[];
  selectedX: string | null;
  selectedY: string | null;
  plot: PlotResponse | null;
  heatmap: { columns: string[]; matrix: number[][]; ordering: number[] } | null;
  outliers: OutlierResponse | null;
  selection: Set<number>;
  plan: Plan | null;
  exportUrls: { csv: string; report: string } | null;
  busy: boolean;
  error: string | null;
  notice: string | null;
}

export function initialState(): UiSessionState {
  return {
    sessionId: null,
    version: 0,
    rowCount: 0,
    columns: [],
    profiles: [],
    preview: [],
    selectedX: null,
    selectedY: null,
    plot: null,
    heatmap: null,
    outliers: null,
    selection: new Set(),
    plan: null,
    exportUrls: null,
    busy: false,
    error: null,
    notice: null,
  };
}

type Listener = (state: UiSessionState) => void;

export class SessionStore {
  state: UiSessionState = initialState();
  private listeners: Listener[] = [];

  constructor(readonly api: ApiClient) {}

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit() {
    for (const listener of this.listeners) listener(this.state);
  }

  /** Re-announce current state (used after mounting a fresh page). */
  notify() {
    this.emit();
  }

  private patch(partial: Partial<UiSessionState>) {
    this.state = { ...this.state, ...partial };
    this.emit();
  }

  private async guard<T>(work: () => Promise<T>): Promise<T | undefined> {
    this.patch({ busy: true, error: null });
    try {
      return await work();
    } catch (error) {
      if (isStaleVersion(error)) {
        // Someone else moved the session forward: refetch, replay nothing.
        this.patch({
          notice: "Session changed elsewhere; view refreshed.",
          selection: new Set(),
        });
        await this.refresh();
        return undefined;
      }
      this.patch({ error: error instanceof Error ? error.message : String(error) });
      return undefined;
    } finally {
      this.patch({ busy: false });
    }
  }

  async upload(csv: string | Blob, name?: string) {
    return this.guard(async () => {
      const created = await this.api.createSession(csv, name);
      this.patch({
        sessionId: created.session_id,
        version: created.version,
        rowCount: created.row_count,
        columns: created.columns,
        profiles: created.profiles,
        preview: created.preview ?? [],
        plan: created.plan,
        selectedX: null,
        selectedY: null,
        plot: null,
        heatmap: null,
        outliers: null,
        selection: new Set(),
        exportUrls: null,
        notice: null,
      });
      return created;
    });
  }

  async retypeColumn(column: string, vtype: string) {
    return this.guard(async () => {
      const sid = this.requireSession();
      const updated = await this.api.retypeColumn(sid, this.state.version, column, vtype);
      this.patch({
        version: updated.version,
        rowCount: updated.row_count,
        columns: updated.columns,
        profiles: updated.profiles,
        plan: updated.plan,
        plot: null,
        outliers: null,
        selection: new Set(),
      });
      return updated;
    });
  }

  async selectVariables(x: string, y?: string | null) {
    return this.guard(async () => {
      const sid = this.requireSession();
      const plot = await this.api.getPlot(sid, x, y ?? undefined);
      this.patch({ selectedX: x, selectedY: y ?? null, plot, version: plot.version });
      return plot;
    });
  }

  async loadHeatmap() {
    return this.guard(async () => {
      const sid = this.requireSession();
      const heatmap = await this.api.getCorrelation(sid);
      this.patch({ heatmap, version: heatmap.version });
      return heatmap;
    });
  }

  async loadOutliers(x: string, y: string, detector = "dbscan") {
    return this.guard(async () => {
      const sid = this.requireSession();
      const outliers = await this.api.getOutliers(sid, x, y, detector);
      this.patch({ outliers, selection: new Set(), version: outliers.version });
      return outliers;
    });
  }

  toggleSelection(row: number) {
    const selection = new Set(this.state.selection);
    if (selection.has(row)) selection.delete(row);
    else selection.add(row);
    this.patch({ selection });
  }

  /** Commit the clicked points; a no-op (no request) when nothing is selected. */
  async commitRemoval() {
    if (this.state.selection.size === 0) return undefined;
    return this.guard(async () => {
      const sid = this.requireSession();
      const rows = [...this.state.selection].sort((a, b) => a - b);
      const result = await this.api.removeRows(sid, this.state.version, rows);
      this.patch({
        version: result.version,
        rowCount: result.row_count,
        selection: new Set(),
      });
      if (this.state.outliers) {
        const outliers = await this.api.getOutliers(
          sid,
          this.state.outliers.x,
          this.state.outliers.y,
          this.state.outliers.detector,
        );
        this.patch({ outliers, version: outliers.version });
      }
      const plan = await this.api.getPlan(sid);
      this.patch({ plan: plan.plan, version: plan.version });
      return result;
    });
  }

  async patchStep(
    stepId: string,
    action: "accept" | "reject" | "edit" | "move",
    params?: Record<string, unknown>,
    position?: number,
  ) {
    return this.guard(async () => {
      const sid = this.requireSession();
      const result = await this.api.patchStep(
        sid,
        this.state.version,
        stepId,
        action,
        params,
        position,
      );
      this.patch({ plan: result.plan, version: result.version });
      return result;
    });
  }

  async undo() {
    return this.guard(async () => {
      const sid = this.requireSession();
      const result = await this.api.undo(sid, this.state.version);
      this.patch({ version: result.version, rowCount: result.row_count });
      await this.refresh();
      return result;
    });
  }

  async finalize() {
    return this.guard(async () => {
      const sid = this.requireSession();
      const result = await this.api.finalize(sid, this.state.version);
      this.patch({
        version: result.version,
        rowCount: result.row_count,
        exportUrls: { csv: result.csv_url, report: result.report_url },
      });
      return result;
    });
  }

  async refresh() {
    const sid = this.state.sessionId;
    if (!sid) return;
    const [profiles, plan] = await Promise.all([
      this.api.getProfiles(sid),
      this.api.getPlan(sid),
    ]);
    this.patch({ profiles: profiles.profiles, plan: plan.plan, version: plan.version });
    if (this.state.outliers) {
      const outliers = await this.api.getOutliers(
        sid,
        this.state.outliers.x,
        this.state.outliers.y,
        this.state.outliers.detector,
      );
      this.patch({ outliers, version: outliers.version, rowCount: outliers.points.length });
    }
  }

  private requireSession(): string {
    if (!this.state.sessionId) throw new Error("no session; upload a file first");
    return this.state.sessionId;
  }
}
