/** Move list panel: one line per ply, straight from the payload. */

import { HistoryEntry } from './payload.js';

export class HistoryPanel {
  private readonly element: HTMLElement;

  constructor(element: HTMLElement) {
    this.element = element;
  }

  setMoves(moves: HistoryEntry[]): void {
    this.element.replaceChildren();
    moves.forEach((move, index) => {
      const row = document.createElement('div');
      row.className = 'history-entry';
      const verb = move.action === 'remove' ? 'removes' : 'places';
      const player = index % 2 === 0 ? 1 : 2;
      row.textContent =
          `${index + 1}. player ${player} ${verb} (${move.row}, ${move.col})`;
      this.element.appendChild(row);
    });
  }
}
