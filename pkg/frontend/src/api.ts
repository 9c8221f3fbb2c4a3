/**
 * Client for the solve service.  The game travels as XML (the same format
 * used for save/load); at most one solve request is in flight per session
 * and it can be cancelled.  Timeouts and errors come back as values so the
 * UI can offer a retry without losing the game state.
 */

export interface SolveOptions {
  label?: string;
  prior?: string;
  seed?: number;
  mode?: "rational" | "decimal" | "both";
  timeout?: number;
}

export interface StructuredEquilibria {
  equilibria: Array<{
    ee: number;
    p1: { index: number; probs: string[]; payoff: string };
    p2: { index: number; probs: string[]; payoff: string };
  }>;
  components: Array<{ index: number; cliques: Array<{ p1: number[]; p2: number[] }> }>;
}

export type SolveOutcome =
  | { kind: "ok"; reportText: string; structured: StructuredEquilibria | null }
  | { kind: "timeout" }
  | { kind: "error"; message: string };

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  async health(): Promise<{ status: string; active_jobs: number }> {
    const resp = await this.fetchImpl(`${this.baseUrl}/api/health`);
    return (await resp.json()) as { status: string; active_jobs: number };
  }

  async solve(
    gameXml: string,
    algorithm: "enum" | "lh" | "lemke",
    options: SolveOptions = {},
    session?: string,
    signal?: AbortSignal,
  ): Promise<SolveOutcome> {
    let resp: Response;
    try {
      resp = await this.fetchImpl(`${this.baseUrl}/api/solve`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ game: gameXml, algorithm, options, session }),
        signal,
      });
    } catch (err) {
      if ((err as Error).name === "AbortError") return { kind: "error", message: "cancelled" };
      return { kind: "error", message: `service unreachable: ${err}` };
    }
    if (resp.status === 408) return { kind: "timeout" };
    const body = (await resp.json()) as {
      status: string;
      report_text?: string;
      structured?: StructuredEquilibria | null;
      error?: string;
    };
    if (resp.ok && body.status === "ok") {
      return {
        kind: "ok",
        reportText: body.report_text ?? "",
        structured: body.structured ?? null,
      };
    }
    return { kind: "error", message: body.error ?? `status ${resp.status}` };
  }

  async convert(
    game: string,
    target: "strategic" | "sequence" | "xml",
  ): Promise<{ ok: boolean; text: string }> {
    const resp = await this.fetchImpl(`${this.baseUrl}/api/convert`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ game, target }),
    });
    const body = (await resp.json()) as { status: string; text?: string; error?: string };
    return { ok: resp.ok && body.status === "ok", text: body.text ?? body.error ?? "" };
  }
}

/** One solve in flight per tab; starting a new one cancels the old. */
export class SolveController {
  private controller: AbortController | null = null;
  busy = false;

  constructor(private readonly api: ApiClient) {}

  cancel(): void {
    this.controller?.abort();
    this.controller = null;
    this.busy = false;
  }

  async run(
    gameXml: string,
    algorithm: "enum" | "lh" | "lemke",
    options: SolveOptions = {},
    session?: string,
  ): Promise<SolveOutcome> {
    this.cancel();
    this.controller = new AbortController();
    this.busy = true;
    try {
      return await this.api.solve(gameXml, algorithm, options, session, this.controller.signal);
    } finally {
      this.busy = false;
      this.controller = null;
    }
  }
}
