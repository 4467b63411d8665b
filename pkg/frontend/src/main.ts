import { ApiClient } from './api.js';
import { App, AppElements } from './app.js';

function grab<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) {
    throw new Error(`missing page element #${id}`);
  }
  return element as T;
}

const elements: AppElements = {
  board: grab('board'),
  history: grab('history'),
  banner: grab('banner'),
  error: grab('error'),
  form: grab<HTMLFormElement>('new-game-form'),
  undoButton: grab<HTMLButtonElement>('undo'),
};

const app = new App(new ApiClient(), elements);
app.newGame({ n: 5 });
