/** Typed HTTP client for the clonefinder review service.
 *
 * The console talks to the service exclusively through these endpoints;
 * it never reads reports or assessment stores directly.
 */

export interface GroupSummary {
  id: string;
  kind: "exact" | "inconsistent";
  clone_count: number;
  files: string[];
  length: number;
  assessed: boolean;
  verdict: string | null;
}

export interface UnitDoc {
  symbol: number;
  first_line: number;
  last_line: number;
}

export interface Excerpt {
  first_line: number;
  lines: string[];
}

export interface CloneDoc {
  file: string;
  first_line: number;
  last_line: number;
  length: number;
  units: UnitDoc[];
  excerpt: Excerpt | null;
}

export interface PairDoc {
  a: number;
  b: number;
  distance: number;
  edits_a: number[];
  edits_b: number[];
}

export interface GroupDetail {
  id: string;
  kind: "exact" | "inconsistent";
  inconsistent_lines: number;
  clones: CloneDoc[];
  pairs: PairDoc[];
  assessment: AssessmentRecord | null;
}

export interface AssessmentRecord {
  group_id: string;
  verdict: string;
  faulty: boolean | null;
  fault_category: number | null;
  assessor: string;
  timestamp: number;
}

export interface AssessmentPayload {
  verdict: "false_positive" | "intentional" | "unintentional";
  faulty?: boolean;
  fault_category?: number;
  assessor?: string;
}

export interface Metrics {
  clone_groups: number;
  inconsistent_groups: number;
  unintentional_groups: number;
  faulty_groups: number;
  inconsistent_logical_lines: number;
  precision_exact: number | null;
  precision_inconsistent: number | null;
  ratio_ic: number | null;
  ratio_uic: number | null;
  ratio_f: number | null;
  ratio_f_uic: number | null;
  fault_density_per_kloc: number | null;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(private baseUrl: string) {}

  health(): Promise<{ status: string; groups: number }> {
    return request(`${this.baseUrl}/health`);
  }

  listGroups(filter?: { kind?: string; assessed?: boolean }): Promise<GroupSummary[]> {
    const params = new URLSearchParams();
    if (filter?.kind !== undefined) params.set("kind", filter.kind);
    if (filter?.assessed !== undefined) params.set("assessed", String(filter.assessed));
    const query = params.toString();
    return request(`${this.baseUrl}/groups${query ? "?" + query : ""}`);
  }

  getGroup(id: string): Promise<GroupDetail> {
    return request(`${this.baseUrl}/groups/${id}`);
  }

  postAssessment(id: string, payload: AssessmentPayload): Promise<AssessmentRecord> {
    return request<{ status: string; assessment: AssessmentRecord }>(
      `${this.baseUrl}/groups/${id}/assessment`,
      {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
      },
    ).then((body) => body.assessment);
  }

  metrics(): Promise<Metrics> {
    return request(`${this.baseUrl}/metrics`);
  }
}
