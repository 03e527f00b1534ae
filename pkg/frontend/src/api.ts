// Typed client for the validation service. Each panel funnels its
// requests through a LatestOnly gate so a slow response can never
// overwrite the verdict for newer input.

export interface RegexResponse {
  regex: string;
  nvars: number;
  complen: number;
  alternatives: number;
  ms: number;
}

export interface MatchResponse {
  match: boolean;
  satisfies: boolean;
  complen: number;
}

export interface EquivResponse {
  verdict: "equivalent" | "inequivalent" | "limit";
  witness?: string;
}

export interface ApiError {
  code: "parse_error" | "interval_error" | "budget_exceeded" | "internal";
  message: string;
  position?: [number, number];
}

export class ApiFailure extends Error {
  constructor(public readonly error: ApiError) {
    super(error.message);
  }
}

async function post<T>(
  base: string,
  path: string,
  body: unknown,
  signal?: AbortSignal,
): Promise<T> {
  const response = await fetch(base + path, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
    signal,
  });
  const payload = await response.json();
  if (!response.ok) throw new ApiFailure(payload as ApiError);
  return payload as T;
}

export class Client {
  constructor(private readonly base: string = "") {}

  regex(
    formula: string,
    pad = true,
    signal?: AbortSignal,
  ): Promise<RegexResponse> {
    return post(this.base, "/api/regex", { formula, pad }, signal);
  }

  match(
    formula: string,
    trace: string,
    pad = true,
    signal?: AbortSignal,
  ): Promise<MatchResponse> {
    return post(this.base, "/api/match", { formula, trace, pad }, signal);
  }

  equiv(
    formula1: string,
    formula2: string,
    signal?: AbortSignal,
  ): Promise<EquivResponse> {
    return post(this.base, "/api/equiv", { formula1, formula2 }, signal);
  }

  async random(params: {
    nvars: number;
    depth: number;
    bound: number;
    seed: number;
    count: number;
  }): Promise<string[]> {
    const query = new URLSearchParams(
      Object.entries(params).map(([k, v]) => [k, String(v)]),
    );
    const response = await fetch(`${this.base}/api/random?${query}`);
    const payload = await response.json();
    if (!response.ok) throw new ApiFailure(payload as ApiError);
    return (payload as { formulas: string[] }).formulas;
  }
}

/**
 * One-in-flight guard: starting a run aborts the previous one, and a
 * response is delivered only while its run is still the newest, so a
 * slow reply can never clobber the verdict for newer input.
 */
export class LatestOnly {
  private seq = 0;
  private controller: AbortController | null = null;

  async run<T>(
    work: (signal: AbortSignal) => Promise<T>,
  ): Promise<T | undefined> {
    const ticket = ++this.seq;
    this.controller?.abort();
    this.controller = new AbortController();
    try {
      const result = await work(this.controller.signal);
      return ticket === this.seq ? result : undefined;
    } catch (err) {
      if (ticket !== this.seq) return undefined; // superseded: ignore
      throw err;
    }
  }
}

/** Trailing-edge debounce; the returned function delays `fn` by `ms`. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), ms);
  };
}
