import type {
  Analysis,
  ConvertResult,
  EngineReply,
  MoveResult,
  SessionDetail,
  SessionSummary,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    detail: string,
    readonly body: Record<string, unknown> = {},
  ) {
    super(detail);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client over the analysis service; the UI talks to the engine
 * exclusively through this. */
export class ServiceClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    signal?: AbortSignal,
  ): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
      signal,
    });
    const payload = await response.json().catch(() => ({}));
    if (!response.ok) {
      throw new ApiError(
        response.status,
        typeof payload.error === "string" ? payload.error : "unknown",
        typeof payload.detail === "string" ? payload.detail : response.statusText,
        payload,
      );
    }
    return payload as T;
  }

  createSession(
    position: unknown,
    analysisBudget?: { max_nodes?: number; max_memo_entries?: number },
  ): Promise<SessionSummary> {
    return this.request("POST", "/sessions", {
      ruleset: "transverse_wave",
      position,
      ...(analysisBudget ? { analysis_budget: analysisBudget } : {}),
    });
  }

  getSession(id: string): Promise<SessionDetail> {
    return this.request("GET", `/sessions/${id}`);
  }

  postMove(
    id: string,
    move: number,
    engineReply: EngineReply = "none",
    seed?: number,
  ): Promise<MoveResult> {
    return this.request("POST", `/sessions/${id}/moves`, {
      move,
      engine_reply: engineReply,
      ...(seed === undefined ? {} : { seed }),
    });
  }

  /** Per-option engine analysis; a 503 comes back as partial results. */
  async getAnalysis(id: string, signal?: AbortSignal): Promise<Analysis> {
    try {
      const body = await this.request<Omit<Analysis, "partial">>(
        "GET",
        `/sessions/${id}/analysis`,
        undefined,
        signal,
      );
      return { partial: false, ...body };
    } catch (err) {
      if (err instanceof ApiError && err.status === 503) {
        const partial = err.body.partial as { options?: Analysis["options"] } | undefined;
        return { partial: true, options: partial?.options ?? [] };
      }
      throw err;
    }
  }

  convert(fromRuleset: string, toRuleset: string, position: unknown): Promise<ConvertResult> {
    return this.request("POST", "/convert", {
      from_ruleset: fromRuleset,
      to_ruleset: toRuleset,
      position,
    });
  }

  solve(document: Record<string, unknown>): Promise<{
    grundy: string;
    outcome: "N" | "P";
    best_move: unknown;
    nodes: number;
  }> {
    return this.request("POST", "/solve", document);
  }
}
