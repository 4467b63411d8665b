/**
 * Wire types for the game service, plus a structural validator.
 *
 * The client renders exclusively from these payloads and computes no
 * game rules of its own; a payload that does not match the schema is
 * rejected whole so nothing partial ever reaches the board.
 */

export type SquareStatus = 'open' | 'closed' | 'queen';
export type BoardClass = 'unlocked' | 'locked' | 'complete';

export interface HistoryEntry {
  action: 'place' | 'remove';
  row: number;
  col: number;
}

export interface GameStatePayload {
  id: string;
  mode: 'hotseat' | 'engine';
  n: number;
  variant: string;
  k: number;
  seed: [number, number] | null;
  occupancy: [number, number][];
  square_status: SquareStatus[][];
  class: BoardClass;
  to_move: number;
  game_over: boolean;
  loser: number | null;
  history: HistoryEntry[];
  legal_moves: [number, number][];
  engine_move: HistoryEntry | null;
}

export class PayloadError extends Error {}

function fail(reason: string): never {
  throw new PayloadError(`malformed game state: ${reason}`);
}

function isPair(value: unknown): value is [number, number] {
  return Array.isArray(value) && value.length === 2 &&
      value.every(v => Number.isInteger(v));
}

function isHistoryEntry(value: unknown): value is HistoryEntry {
  if (typeof value !== 'object' || value === null) return false;
  const entry = value as Record<string, unknown>;
  return (entry.action === 'place' || entry.action === 'remove') &&
      Number.isInteger(entry.row) && Number.isInteger(entry.col);
}

const STATUSES = new Set(['open', 'closed', 'queen']);
const CLASSES = new Set(['unlocked', 'locked', 'complete']);

/** Check a server response against the schema and narrow its type. */
export function validatePayload(raw: unknown): GameStatePayload {
  if (typeof raw !== 'object' || raw === null) fail('not an object');
  const p = raw as Record<string, unknown>;
  if (typeof p.id !== 'string' || p.id === '') fail('missing id');
  if (p.mode !== 'hotseat' && p.mode !== 'engine') fail('bad mode');
  if (!Number.isInteger(p.n) || (p.n as number) < 1) fail('bad board size');
  const n = p.n as number;
  if (typeof p.variant !== 'string') fail('bad variant');
  if (!Number.isInteger(p.k)) fail('bad modulus');
  if (p.seed !== null && !isPair(p.seed)) fail('bad seed');
  if (!Array.isArray(p.occupancy) || !p.occupancy.every(isPair)) {
    fail('bad occupancy');
  }
  const grid = p.square_status;
  if (!Array.isArray(grid) || grid.length !== n) fail('bad status grid');
  for (const row of grid) {
    if (!Array.isArray(row) || row.length !== n ||
        !row.every(cell => STATUSES.has(cell as string))) {
      fail('bad status grid');
    }
  }
  if (!CLASSES.has(p.class as string)) fail('bad board class');
  if (p.to_move !== 1 && p.to_move !== 2) fail('bad to_move');
  if (typeof p.game_over !== 'boolean') fail('bad game_over');
  if (p.loser !== null && p.loser !== 1 && p.loser !== 2) fail('bad loser');
  if (!Array.isArray(p.history) || !p.history.every(isHistoryEntry)) {
    fail('bad history');
  }
  if (!Array.isArray(p.legal_moves) || !p.legal_moves.every(isPair)) {
    fail('bad legal_moves');
  }
  if (p.engine_move !== null && p.engine_move !== undefined &&
      !isHistoryEntry(p.engine_move)) {
    fail('bad engine_move');
  }
  return {
    ...(p as unknown as GameStatePayload),
    engine_move: (p.engine_move as HistoryEntry | undefined) ?? null,
  };
}
