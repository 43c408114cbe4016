import type { AcceptReply, AcceptRequest, Health, ResultDoc } from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/**
 * Thin client over the service's JSON API. The fetch function is
 * injectable so tests can stub the network or point at a live server.
 */
export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const reply = await this.fetchFn(this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!reply.ok) throw new ApiError(reply.status, `${path}: HTTP ${reply.status}`);
    return (await reply.json()) as T;
  }

  async translate(text: string, max?: number): Promise<ResultDoc> {
    return this.post<ResultDoc>("/api/translate", max == null ? { text } : { text, max });
  }

  async accept(request: AcceptRequest): Promise<AcceptReply> {
    return this.post<AcceptReply>("/api/accept", request);
  }

  async health(): Promise<Health> {
    const reply = await this.fetchFn(this.base + "/api/health");
    if (!reply.ok) throw new ApiError(reply.status, `health: HTTP ${reply.status}`);
    return (await reply.json()) as Health;
  }
}
