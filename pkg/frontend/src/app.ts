/**
 * Application controller: owns the one current game, the pending
 * flag, and the banners.  Board and history render from the last
 * validated payload and from nothing else.
 */

import { ApiClient, ApiError, NewGameOptions } from './api.js';
import { BoardView } from './board.js';
import { HistoryPanel } from './history.js';
import { GameStatePayload, PayloadError } from './payload.js';

export interface AppElements {
  board: HTMLElement;
  history: HTMLElement;
  banner: HTMLElement;
  error: HTMLElement;
  form: HTMLFormElement;
  undoButton: HTMLButtonElement;
}

const BANNER_WORD: Record<string, string> = {
  unlocked: 'Unlocked',
  locked: 'Locked',
  complete: 'Complete',
};

export class App {
  private readonly api: ApiClient;
  private readonly elements: AppElements;
  private readonly board: BoardView;
  private readonly history: HistoryPanel;
  private state: GameStatePayload | null = null;
  private pending = false;

  constructor(api: ApiClient, elements: AppElements) {
    this.api = api;
    this.elements = elements;
    this.board = new BoardView(elements.board,
                               (r, c) => this.submitMove(r, c));
    this.history = new HistoryPanel(elements.history);
    elements.form.addEventListener('submit', event => {
      event.preventDefault();
      this.newGame(this.readForm());
    });
    elements.undoButton.addEventListener('click', () => this.undo());
    const variant = elements.form.elements.namedItem('variant');
    if (variant instanceof HTMLSelectElement) {
      variant.addEventListener('change', () => this.toggleSeedInputs());
      this.toggleSeedInputs();
    }
  }

  get currentState(): GameStatePayload | null {
    return this.state;
  }

  get isPending(): boolean {
    return this.pending;
  }

  private readForm(): NewGameOptions {
    const data = new FormData(this.elements.form);
    const options: NewGameOptions = {
      n: Number(data.get('n')),
      variant: String(data.get('variant') ?? 'standard'),
      k: Number(data.get('k') ?? 2),
      mode: data.get('mode') === 'engine' ? 'engine' : 'hotseat',
    };
    const seedRow = data.get('seed-row');
    const seedCol = data.get('seed-col');
    if (options.variant !== 'standard' && seedRow && seedCol) {
      options.seed = [Number(seedRow), Number(seedCol)];
    }
    return options;
  }

  private toggleSeedInputs(): void {
    const form = this.elements.form;
    const variant = form.elements.namedItem('variant');
    const seeded = variant instanceof HTMLSelectElement &&
        variant.value !== 'standard';
    const fieldset = form.querySelector<HTMLElement>('.seed-fields');
    if (fieldset) {
      fieldset.hidden = !seeded;
    }
  }

  newGame(options: NewGameOptions): Promise<void> {
    return this.perform(() => this.api.newGame(options));
  }

  submitMove(row: number, col: number): Promise<void> {
    if (this.state === null || this.pending || this.state.game_over) {
      return Promise.resolve();
    }
    const id = this.state.id;
    return this.perform(() => this.api.move(id, row, col));
  }

  undo(): Promise<void> {
    if (this.state === null || this.pending) {
      return Promise.resolve();
    }
    const id = this.state.id;
    return this.perform(() => this.api.undo(id));
  }

  /** Run one request at a time; render the response or surface the error. */
  private async perform(action: () => Promise<GameStatePayload>):
      Promise<void> {
    if (this.pending) {
      return;
    }
    this.setPending(true);
    this.clearError();
    try {
      this.show(await action());
    } catch (err) {
      if (err instanceof PayloadError) {
        this.showError(err.message, null);
      } else if (err instanceof ApiError) {
        this.showError(err.message,
                       err.retryable ? () => this.perform(action) : null);
      } else {
        throw err;
      }
    } finally {
      this.setPending(false);
    }
  }

  private setPending(pending: boolean): void {
    this.pending = pending;
    this.board.setEnabled(!pending);
    for (const element of Array.from(this.elements.form.elements)) {
      if (element === this.elements.undoButton) {
        continue;
      }
      if (element instanceof HTMLInputElement ||
          element instanceof HTMLSelectElement ||
          element instanceof HTMLButtonElement) {
        element.disabled = pending;
      }
    }
    this.updateUndo();
  }

  private show(state: GameStatePayload): void {
    this.state = state;
    this.board.render(state);
    this.history.setMoves(state.history);
    this.elements.banner.textContent = this.bannerText(state);
    this.updateUndo();
  }

  private updateUndo(): void {
    this.elements.undoButton.disabled =
        this.pending || this.state === null ||
        this.state.history.length === 0;
  }

  private bannerText(state: GameStatePayload): string {
    const word = BANNER_WORD[state.class] ?? state.class;
    if (!state.game_over) {
      const mover = state.mode === 'engine'
          ? (state.to_move === 1 ? 'your move' : 'engine to move')
          : `player ${state.to_move} to move`;
      return `${word} · ${mover}`;
    }
    if (state.mode === 'engine') {
      const outcome = state.loser === 2
          ? 'the engine cannot move and loses'
          : 'you cannot move and lose';
      return `${word} · ${outcome}`;
    }
    return `${word} · player ${state.loser} cannot move and loses`;
  }

  private showError(message: string, retry: (() => void) | null): void {
    const box = this.elements.error;
    box.replaceChildren();
    box.hidden = false;
    const text = document.createElement('span');
    text.textContent = message;
    box.appendChild(text);
    if (retry) {
      const button = document.createElement('button');
      button.type = 'button';
      button.textContent = 'retry';
      button.addEventListener('click', () => {
        this.clearError();
        retry();
      });
      box.appendChild(button);
    }
  }

  private clearError(): void {
    this.elements.error.hidden = true;
    this.elements.error.replaceChildren();
  }
}
