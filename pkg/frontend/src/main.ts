// Browser entry point: wires the chat session and renderers to the page.

import { ChatSession } from './chat.js';
import { renderHistory } from './render.js';

const BASE_URL = '';

function start() {
  const session = new ChatSession(BASE_URL);
  const form = document.getElementById('chat-form') as HTMLFormElement;
  const input = document.getElementById('chat-input') as HTMLInputElement;
  const send = document.getElementById('chat-send') as HTMLButtonElement;
  const history = document.getElementById('history') as HTMLElement;

  function redraw() {
    history.innerHTML = renderHistory(session.history);
    history.scrollTop = history.scrollHeight;
    send.disabled = !session.canSubmit(input.value);
    input.disabled = session.busy;
  }

  input.addEventListener('input', () => {
    send.disabled = !session.canSubmit(input.value);
  });

  form.addEventListener('submit', async (event) => {
    event.preventDefault();
    const text = input.value;
    if (!session.canSubmit(text)) {
      return;
    }
    input.value = '';
    redraw();
    await session.submitQuery(text);
    redraw();
    input.focus();
  });

  history.addEventListener('click', async (event) => {
    const target = event.target as HTMLElement;
    if (target.dataset.action === 'retry') {
      await session.retry();
      redraw();
    }
  });

  redraw();
}

window.addEventListener('DOMContentLoaded', start);
