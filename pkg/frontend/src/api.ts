import type {
  AnalyzeResponse,
  ApiErrorBody,
  ChoiceName,
  PlayerName,
  SessionResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody | null,
  ) {
    super(body ? `${body.error}: ${body.detail}` : `HTTP ${status}`);
    this.name = "ApiError";
  }
}

/** Thin typed client for the analysis service. */
export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  analyze(position: string, open?: string): Promise<AnalyzeResponse> {
    const body: Record<string, string> = { position };
    if (open !== undefined) {
      body.open = open;
    }
    return this.request<AnalyzeResponse>("POST", "/analyze", body);
  }

  createSession(position: string, opener: PlayerName): Promise<SessionResponse> {
    return this.request<SessionResponse>("POST", "/session", { position, opener });
  }

  getSession(id: string): Promise<SessionResponse> {
    return this.request<SessionResponse>("GET", `/session/${id}`);
  }

  openComponent(id: string, component: string): Promise<SessionResponse> {
    return this.request<SessionResponse>("POST", `/session/${id}/open`, {
      component,
    });
  }

  decide(id: string, choice: ChoiceName): Promise<SessionResponse> {
    return this.request<SessionResponse>("POST", `/session/${id}/decide`, {
      choice,
    });
  }

  private async request<T>(
    method: "GET" | "POST",
    path: string,
    body?: unknown,
  ): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let errorBody: ApiErrorBody | null = null;
      try {
        errorBody = (await response.json()) as ApiErrorBody;
      } catch {
        errorBody = null;
      }
      throw new ApiError(response.status, errorBody);
    }
    return (await response.json()) as T;
  }
}
