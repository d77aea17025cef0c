// HTML renderers for chat turns and result cards. Pure string -> string so
// tests run without a DOM; main.ts injects the output via innerHTML.

import { QueryResult } from './api.js';
import { ChatTurn } from './chat.js';

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export function renderResultCard(result: QueryResult): string {
  const link = result.uri
    ? `<a class="card-link" href="${escapeHtml(result.uri)}" target="_blank" rel="noopener">Open document</a>`
    : '';
  return [
    `<div class="card" data-rank="${result.final_rank}">`,
    `<span class="card-rank">${result.final_rank}</span>`,
    `<h3 class="card-heading">${escapeHtml(result.heading)}</h3>`,
    `<span class="card-country">${escapeHtml(result.country)}</span>`,
    `<p class="card-snippet">${escapeHtml(result.snippet)}</p>`,
    link,
    '<details class="card-provenance"><summary>Ranking detail</summary>',
    `<span>heading rank ${result.heading_rank}</span>`,
    `<span>content rank ${result.content_rank}</span>`,
    `<span>borda points ${result.borda_points}</span>`,
    '</details>',
    '</div>',
  ]
    .filter((part) => part !== '')
    .join('\n');
}

export function renderTurn(turn: ChatTurn): string {
  const parts = [`<div class="turn turn-${turn.role}">`];
  parts.push(`<p class="turn-text">${escapeHtml(turn.text)}</p>`);
  if (turn.results) {
    const cards = [...turn.results].sort((a, b) => a.final_rank - b.final_rank);
    parts.push(`<div class="cards">${cards.map(renderResultCard).join('\n')}</div>`);
  }
  if (turn.retryable) {
    parts.push('<button class="retry" data-action="retry">Retry</button>');
  }
  parts.push('</div>');
  return parts.join('\n');
}

export function renderHistory(turns: readonly ChatTurn[]): string {
  return turns.map(renderTurn).join('\n');
}
