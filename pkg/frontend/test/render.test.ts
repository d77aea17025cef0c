import { describe, expect, it } from 'vitest';

import { QueryResult } from '../src/api.js';
import { ChatTurn } from '../src/chat.js';
import { escapeHtml, renderHistory, renderResultCard, renderTurn } from '../src/render.js';

const result: QueryResult = {
  doc_id: 'myanmar-trade#1',
  heading: 'กฎระเบียบการนำเข้าสินค้าในเมียนมาร์',
  country: 'MM',
  snippet: 'ข้อมูลการนำเข้า...',
  uri: 'https://example.org/mm/trade',
  heading_rank: 1,
  content_rank: 2,
  borda_points: 9,
  final_rank: 1,
};

describe('escapeHtml', () => {
  it('neutralizes markup', () => {
    expect(escapeHtml('<b>&"x"</b>')).toBe('&lt;b&gt;&amp;&quot;x&quot;&lt;/b&gt;');
  });
});

describe('renderResultCard', () => {
  it('shows heading, snippet, country badge, link and provenance', () => {
    const html = renderResultCard(result);
    expect(html).toContain('กฎระเบียบการนำเข้าสินค้าในเมียนมาร์');
    expect(html).toContain('ข้อมูลการนำเข้า...');
    expect(html).toContain('card-country">MM<');
    expect(html).toContain('href="https://example.org/mm/trade"');
    expect(html).toContain('heading rank 1');
    expect(html).toContain('content rank 2');
    expect(html).toContain('borda points 9');
  });

  it('renders no link when the uri is missing', () => {
    const html = renderResultCard({ ...result, uri: '' });
    expect(html).not.toContain('<a ');
  });

  it('escapes hostile headings', () => {
    const html = renderResultCard({ ...result, heading: '<script>x</script>' });
    expect(html).not.toContain('<script>');
    expect(html).toContain('&lt;script&gt;');
  });
});

describe('renderTurn', () => {
  it('orders cards by final_rank regardless of input order', () => {
    const turn: ChatTurn = {
      role: 'system',
      text: 'Top 3 documents',
      results: [
        { ...result, doc_id: 'b', final_rank: 2 },
        { ...result, doc_id: 'c', final_rank: 3 },
        { ...result, doc_id: 'a', final_rank: 1 },
      ],
      timestamp: new Date(),
    };
    const ranks = [...renderTurn(turn).matchAll(/data-rank="(\d)"/g)].map((m) => m[1]);
    expect(ranks).toEqual(['1', '2', '3']);
  });

  it('adds a retry button only on retryable turns', () => {
    const base: ChatTurn = { role: 'system', text: 'oops', timestamp: new Date() };
    expect(renderTurn({ ...base, retryable: true })).toContain('data-action="retry"');
    expect(renderTurn(base)).not.toContain('data-action="retry"');
  });
});

describe('renderHistory', () => {
  it('renders user and system turns in order', () => {
    const turns: ChatTurn[] = [
      { role: 'user', text: 'คำถาม', timestamp: new Date() },
      { role: 'system', text: 'Top 1 documents', results: [result], timestamp: new Date() },
    ];
    const html = renderHistory(turns);
    expect(html.indexOf('turn-user')).toBeGreaterThan(-1);
    expect(html.indexOf('turn-user')).toBeLessThan(html.indexOf('turn-system'));
  });
});
