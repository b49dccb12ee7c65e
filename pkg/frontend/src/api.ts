/** Typed client over the service's JSON API. The dashboard never computes
 * anything domain-side: every displayed label or probability comes out of
 * a response handled here, and classify() keeps the raw response text so
 * views can prove byte-level provenance. */

import type {
  ApiErrorBody,
  LoginResponse,
  ModelInfo,
  PatientRecord,
  RecordFilter,
} from "./types.js";
import { Session } from "./session.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public errorCode: string,
    message: string,
  ) {
    super(message);
  }
}

export class AuthExpiredError extends ApiError {}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private fetchImpl: FetchLike;

  constructor(
    public baseUrl: string,
    public session: Session,
    fetchImpl?: FetchLike,
  ) {
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request(
    method: string,
    path: string,
    body?: unknown,
    authenticated = true,
  ): Promise<Response> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["content-type"] = "application/json";
    if (authenticated) {
      const state = this.session.current();
      if (!state) throw new AuthExpiredError(401, "authorization_required", "not logged in");
      headers["authorization"] = `Bearer ${state.token}`;
    }
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (response.status === 401 && authenticated) {
      // the 401 contract: drop the session and send the user to login
      this.session.clear();
      const info = await readError(response);
      throw new AuthExpiredError(401, info.error_code, info.message);
    }
    if (!response.ok) {
      const info = await readError(response);
      throw new ApiError(response.status, info.error_code, info.message);
    }
    return response;
  }

  async login(username: string, password: string): Promise<LoginResponse> {
    const response = await this.request(
      "POST",
      "/api/login",
      { username, password },
      false,
    );
    const data = (await response.json()) as LoginResponse;
    this.session.start({ token: data.token, username, expiresAt: data.expires_at });
    return data;
  }

  async logout(): Promise<void> {
    try {
      await this.request("POST", "/api/logout", {});
    } finally {
      this.session.clear();
    }
  }

  async listRecords(filter: RecordFilter = {}): Promise<PatientRecord[]> {
    const params = new URLSearchParams();
    for (const [key, value] of Object.entries(filter)) {
      if (value) params.set(key, value);
    }
    const query = params.toString();
    const response = await this.request(
      "GET",
      `/api/records${query ? "?" + query : ""}`,
    );
    return (await response.json()) as PatientRecord[];
  }

  async createRecord(
    patientName: string,
    payload: { text?: string; imageBase64?: string },
  ): Promise<PatientRecord> {
    const body: Record<string, string> = { patient_name: patientName };
    if (payload.text !== undefined) body.text = payload.text;
    if (payload.imageBase64 !== undefined) body.image_base64 = payload.imageBase64;
    const response = await this.request("POST", "/api/records", body);
    return (await response.json()) as PatientRecord;
  }

  /** Returns the updated record plus the raw response text. */
  async classifyRecord(
    recordId: string,
    modelId: string,
  ): Promise<{ record: PatientRecord; rawJson: string }> {
    const response = await this.request(
      "POST",
      `/api/records/${recordId}/classify`,
      { model_id: modelId },
    );
    const rawJson = await response.text();
    return { record: JSON.parse(rawJson) as PatientRecord, rawJson };
  }

  async listModels(): Promise<ModelInfo[]> {
    const response = await this.request("GET", "/api/models");
    return (await response.json()) as ModelInfo[];
  }

  async health(): Promise<{ status: string; model_loaded: boolean }> {
    const response = await this.request("GET", "/api/health", undefined, false);
    return (await response.json()) as { status: string; model_loaded: boolean };
  }
}

async function readError(response: Response): Promise<ApiErrorBody> {
  try {
    const data = (await response.json()) as Partial<ApiErrorBody>;
    return {
      error_code: data.error_code ?? `http_${response.status}`,
      message: data.message ?? response.statusText,
    };
  } catch {
    return { error_code: `http_${response.status}`, message: response.statusText };
  }
}

/** The default model is the highest-test-accuracy artifact. */
export function pickDefaultModel(models: ModelInfo[]): ModelInfo | null {
  if (models.length === 0) return null;
  return models.reduce((best, candidate) => {
    const bestScore = best.test_accuracy ?? -1;
    const score = candidate.test_accuracy ?? -1;
    return score > bestScore ? candidate : best;
  });
}
