/** Payload shapes mirroring the engine's /v1 JSON schema. */

export type PlotType =
  | "scatter_plot"
  | "bar_chart"
  | "violin_plot"
  | "line_graph"
  | "pie_chart"
  | "histogram"
  | "box_plot"
  | "heatmap"
  | "alluvial_plot";

export type StepOrigin = "recommended" | "user_accepted" | "user_edited" | "propagated";

export interface ColumnInfo {
  name: string;
  vtype: string;
}

export interface Profile {
  name: string;
  vtype: string;
  count: number;
  missing_count: number;
  distinct_count: number;
  shape: string;
  mean: number | null;
  median: number | null;
  mode: unknown;
  std: number | null;
  skewness: number | null;
  kurtosis: number | null;
  min: number | null;
  max: number | null;
}

export interface StepRecord {
  id: string;
  op: string;
  params: Record<string, unknown>;
  columns: string[];
  origin: StepOrigin;
  provenance?: { from: string; distance: number; metric: string };
}

export interface Plan {
  format: string;
  version: number;
  fingerprint: string;
  seed: number;
  steps: StepRecord[];
}

export interface SessionCreated {
  session_id: string;
  version: number;
  row_count: number;
  column_count: number;
  fingerprint: string;
  columns: ColumnInfo[];
  profiles: Profile[];
  plan: Plan;
  type_inference: { columns: { name: string; vtype: string }[] };
  preview?: Record<string, string | null>[];
}

export interface PlotRecommendation {
  plot_type: PlotType;
  source: "rule" | "svm";
  score: number;
}

export interface PlotResponse {
  version: number;
  x: string;
  y: string | null;
  recommendation: PlotRecommendation;
  pair: Record<string, unknown> | null;
  spec: { plot_type: PlotType; x: string; y: string | null } & Record<string, unknown>;
}

export interface OutlierPoint {
  row: number;
  x: number | null;
  y: number | null;
  flagged: boolean;
  score: number;
}

export interface OutlierResponse {
  detector: string;
  params: Record<string, unknown>;
  x: string;
  y: string;
  version: number;
  points: OutlierPoint[];
}

export interface RemoveResult {
  version: number;
  row_count: number;
  undo_token: number;
}

export interface FinalizeResult {
  version: number;
  row_count: number;
  csv_url: string;
  report_url: string;
}

export interface ApiError extends Error {
  status: number;
  payload: { error?: string; message?: string; expected_version?: number };
}
