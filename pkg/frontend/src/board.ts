/**
 * Board renderer.  The grid is rebuilt from each payload: queens get
 * a glyph, closed squares a shade, and exactly the payload's
 * legal_moves are clickable.  No rule logic lives here; in the
 * removal variant the clickable squares are occupied ones, and that
 * still comes straight from legal_moves.
 */

import { GameStatePayload } from './payload.js';

export type SquareHandler = (row: number, col: number) => void;

export class BoardView {
  private readonly container: HTMLElement;
  private readonly onSquare: SquareHandler;
  private enabled = true;

  constructor(container: HTMLElement, onSquare: SquareHandler) {
    this.container = container;
    this.onSquare = onSquare;
  }

  /** Grey the whole board out while a request is in flight. */
  setEnabled(enabled: boolean): void {
    this.enabled = enabled;
    this.container.classList.toggle('pending', !enabled);
  }

  render(state: GameStatePayload): void {
    const legal = new Set(state.legal_moves.map(([r, c]) => `${r},${c}`));
    const table = document.createElement('table');
    table.className = 'board';
    for (let r = 1; r <= state.n; r++) {
      const tr = document.createElement('tr');
      for (let c = 1; c <= state.n; c++) {
        const status = state.square_status[r - 1]![c - 1]!;
        const td = document.createElement('td');
        td.dataset.row = String(r);
        td.dataset.col = String(c);
        td.className = `square ${status}`;
        if (status === 'queen') {
          td.textContent = '♛';
        }
        if (legal.has(`${r},${c}`)) {
          td.classList.add('clickable');
          td.addEventListener('click', () => {
            if (this.enabled) {
              this.onSquare(r, c);
            }
          });
        }
        tr.appendChild(td);
      }
      table.appendChild(tr);
    }
    this.container.replaceChildren(table);
  }

  clear(): void {
    this.container.replaceChildren();
  }
}
