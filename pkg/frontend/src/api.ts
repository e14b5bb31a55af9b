// Typed client for the service's REST endpoints. All network traffic in
// the app goes through this file; no request is built anywhere else.

import type {
  DiffResponse,
  EssayRecord,
  Feedback,
  ProgressResponse,
  Prompt,
  Submission,
  UserRecord,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.base + path, {
        method,
        headers: body === undefined ? undefined : { "content-type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(0, "network_error", String(err));
    }
    let payload: unknown = null;
    try {
      payload = await response.json();
    } catch {
      payload = null;
    }
    if (!response.ok) {
      const detail = (payload ?? {}) as { code?: string; message?: string };
      throw new ApiError(
        response.status,
        detail.code ?? "http_error",
        detail.message ?? `HTTP ${response.status}`,
      );
    }
    return payload as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("GET", "/health");
  }

  async listPrompts(filter?: { level?: string; topic?: string; genre?: string }): Promise<Prompt[]> {
    const params = new URLSearchParams();
    if (filter?.level) params.set("level", filter.level);
    if (filter?.topic) params.set("topic", filter.topic);
    if (filter?.genre) params.set("genre", filter.genre);
    const query = params.toString();
    const data = await this.request<{ prompts: Prompt[] }>(
      "GET",
      `/prompts${query ? `?${query}` : ""}`,
    );
    return data.prompts;
  }

  getPrompt(promptId: string): Promise<Prompt> {
    return this.request("GET", `/prompts/${encodeURIComponent(promptId)}`);
  }

  createUser(fields?: Record<string, unknown>): Promise<UserRecord> {
    return this.request("POST", "/users", fields ?? {});
  }

  updateProfile(userId: string, fields: Record<string, unknown>): Promise<UserRecord> {
    return this.request("PATCH", `/users/${encodeURIComponent(userId)}/profile`, fields);
  }

  createEssay(userId: string, promptId: string): Promise<EssayRecord> {
    return this.request("POST", "/essays", { user_id: userId, prompt_id: promptId });
  }

  getEssay(essayId: string): Promise<EssayRecord> {
    return this.request("GET", `/essays/${encodeURIComponent(essayId)}`);
  }

  check(essayId: string, text: string): Promise<Submission> {
    return this.request("POST", `/essays/${encodeURIComponent(essayId)}/check`, { text });
  }

  progress(essayId: string): Promise<ProgressResponse> {
    return this.request("GET", `/essays/${encodeURIComponent(essayId)}/progress`);
  }

  diff(essayId: string, fromRev: number, toRev: number): Promise<DiffResponse> {
    return this.request(
      "GET",
      `/essays/${encodeURIComponent(essayId)}/diff?from=${fromRev}&to=${toRev}`,
    );
  }
}

export type { Feedback };
