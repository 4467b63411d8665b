/**
 * Canned service responses, captured verbatim from the running game
 * service so the fakes cannot drift from the real wire format.
 */

import { GameStatePayload } from '../src/payload.js';

export const EMPTY_3X3: GameStatePayload = {
  id: '189d1ff317ec4c288122de6e1ae5f5fc',
  mode: 'hotseat',
  n: 3,
  variant: 'standard',
  k: 2,
  seed: null,
  occupancy: [],
  square_status: [
    ['open', 'open', 'open'],
    ['open', 'open', 'open'],
    ['open', 'open', 'open'],
  ],
  class: 'unlocked',
  to_move: 1,
  game_over: false,
  loser: null,
  history: [],
  legal_moves: [
    [1, 1], [1, 2], [1, 3],
    [2, 1], [2, 2], [2, 3],
    [3, 1], [3, 2], [3, 3],
  ],
  engine_move: null,
};

export const LOCKED_3X3: GameStatePayload = {
  id: '189d1ff317ec4c288122de6e1ae5f5fc',
  mode: 'hotseat',
  n: 3,
  variant: 'standard',
  k: 2,
  seed: null,
  occupancy: [[2, 2]],
  square_status: [
    ['closed', 'closed', 'closed'],
    ['closed', 'queen', 'closed'],
    ['closed', 'closed', 'closed'],
  ],
  class: 'locked',
  to_move: 2,
  game_over: true,
  loser: 2,
  history: [{ action: 'place', row: 2, col: 2 }],
  legal_moves: [],
  engine_move: null,
};

export const ENGINE_2X2: GameStatePayload = {
  id: 'fd7299f859a4447a9fb482cdb81632de',
  mode: 'engine',
  n: 2,
  variant: 'standard',
  k: 2,
  seed: null,
  occupancy: [],
  square_status: [
    ['open', 'open'],
    ['open', 'open'],
  ],
  class: 'unlocked',
  to_move: 1,
  game_over: false,
  loser: null,
  history: [],
  legal_moves: [[1, 1], [1, 2], [2, 1], [2, 2]],
  engine_move: null,
};

export const ENGINE_2X2_DONE: GameStatePayload = {
  id: 'fd7299f859a4447a9fb482cdb81632de',
  mode: 'engine',
  n: 2,
  variant: 'standard',
  k: 2,
  seed: null,
  occupancy: [[1, 1]],
  square_status: [
    ['queen', 'closed'],
    ['closed', 'closed'],
  ],
  class: 'locked',
  to_move: 2,
  game_over: true,
  loser: 2,
  history: [{ action: 'place', row: 1, col: 1 }],
  legal_moves: [],
  engine_move: null,
};

export const ENGINE_3X3_REPLY: GameStatePayload = {
  id: '39a2775a6d88472991a65b6678e3026a',
  mode: 'engine',
  n: 3,
  variant: 'standard',
  k: 2,
  seed: null,
  occupancy: [[1, 1], [2, 3]],
  square_status: [
    ['queen', 'open', 'open'],
    ['open', 'open', 'queen'],
    ['closed', 'closed', 'open'],
  ],
  class: 'unlocked',
  to_move: 1,
  game_over: false,
  loser: null,
  history: [
    { action: 'place', row: 1, col: 1 },
    { action: 'place', row: 2, col: 3 },
  ],
  legal_moves: [[1, 2], [1, 3], [2, 1], [2, 2], [3, 3]],
  engine_move: { action: 'place', row: 2, col: 3 },
};

export const COMP_2X2: GameStatePayload = {
  id: '27bdf9a622a647308d804a1649a0976a',
  mode: 'hotseat',
  n: 2,
  variant: 'complementary',
  k: 2,
  seed: [2, 2],
  occupancy: [[1, 1], [1, 2], [2, 1]],
  square_status: [
    ['queen', 'queen'],
    ['queen', 'closed'],
  ],
  class: 'unlocked',
  to_move: 1,
  game_over: false,
  loser: null,
  history: [],
  legal_moves: [[1, 1], [1, 2], [2, 1]],
  engine_move: null,
};

export function clone<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}
