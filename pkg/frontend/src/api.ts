/**
 * Thin typed client for the game service.  Every 2xx body passes
 * through validatePayload, so callers only ever see checked state.
 */

import { GameStatePayload, validatePayload } from './payload.js';

export interface NewGameOptions {
  n: number;
  variant?: string;
  k?: number;
  seed?: [number, number] | null;
  mode?: 'hotseat' | 'engine';
}

/** A response the server answered with an error body, or no answer at all. */
export class ApiError extends Error {
  readonly code: string;
  readonly status: number;
  /** Network failures and 5xx responses are worth retrying as-is. */
  readonly retryable: boolean;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.code = code;
    this.status = status;
    this.retryable = status === 0 || status >= 500;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(base = '', fetchImpl?: FetchLike) {
    this.base = base.replace(/\/$/, '');
    // bind so the default implementation keeps its window receiver
    this.fetchImpl = fetchImpl ?? fetch.bind(globalThis);
  }

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    let response: Response;
    try {
      response = await this.fetchImpl(this.base + path, init);
    } catch (err) {
      throw new ApiError('network', `service unreachable: ${err}`, 0);
    }
    let body: unknown = null;
    try {
      body = await response.json();
    } catch {
      // fall through; missing bodies are handled below
    }
    if (!response.ok) {
      const errBody = body as { error?: string; message?: string } | null;
      throw new ApiError(errBody?.error ?? 'http-error',
                         errBody?.message ?? `status ${response.status}`,
                         response.status);
    }
    return body;
  }

  private async requestState(path: string,
                             init?: RequestInit): Promise<GameStatePayload> {
    return validatePayload(await this.request(path, init));
  }

  private post(payload: unknown): RequestInit {
    return {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(payload),
    };
  }

  newGame(options: NewGameOptions): Promise<GameStatePayload> {
    return this.requestState('/games', this.post(options));
  }

  getGame(id: string): Promise<GameStatePayload> {
    return this.requestState(`/games/${id}`);
  }

  move(id: string, row: number, col: number): Promise<GameStatePayload> {
    return this.requestState(`/games/${id}/moves`, this.post({ row, col }));
  }

  undo(id: string): Promise<GameStatePayload> {
    return this.requestState(`/games/${id}/undo`, this.post({}));
  }
}
