// Chat session state machine: an append-only list of turns, one in-flight
// query at a time. Free of DOM concerns so it can be tested headlessly.

import { ApiError, QueryResult, queryDocuments } from './api.js';

export interface ChatTurn {
  role: 'user' | 'system';
  text: string;
  results?: QueryResult[];
  retryable?: boolean;
  timestamp: Date;
}

export class ChatSession {
  private turns: ChatTurn[] = [];
  private inFlight = false;
  private lastQuery: string | null = null;

  constructor(
    private readonly baseUrl: string,
    private readonly topK = 3,
  ) {}

  get history(): readonly ChatTurn[] {
    return this.turns;
  }

  get busy(): boolean {
    return this.inFlight;
  }

  /** Blank input cannot be submitted; neither can anything mid-flight. */
  canSubmit(text: string): boolean {
    return !this.inFlight && text.trim().length > 0;
  }

  async submitQuery(text: string): Promise<readonly ChatTurn[]> {
    if (!this.canSubmit(text)) {
      return this.turns;
    }
    this.inFlight = true;
    this.lastQuery = text;
    this.push({ role: 'user', text, timestamp: new Date() });
    try {
      const response = await queryDocuments(this.baseUrl, text, this.topK);
      const cards = [...response.results].sort((a, b) => a.final_rank - b.final_rank);
      this.push({
        role: 'system',
        text: `Top ${cards.length} documents`,
        results: cards,
        timestamp: new Date(),
      });
    } catch (err) {
      this.push(this.errorTurn(err));
    } finally {
      this.inFlight = false;
    }
    return this.turns;
  }

  /** Re-submit the query that produced the last retryable error turn. */
  async retry(): Promise<readonly ChatTurn[]> {
    const last = this.turns[this.turns.length - 1];
    if (!last || !last.retryable || this.lastQuery === null) {
      return this.turns;
    }
    return this.submitQuery(this.lastQuery);
  }

  private errorTurn(err: unknown): ChatTurn {
    // empty_query means the text held no usable keywords: ask to rephrase.
    if (err instanceof ApiError && err.code === 'empty_query') {
      return {
        role: 'system',
        text: 'I could not find any keywords in that question — please rephrase it.',
        timestamp: new Date(),
      };
    }
    // everything else (network failure, 503 no_index, ...) is retryable
    return {
      role: 'system',
      text: 'The document service is not responding. Try again in a moment.',
      retryable: true,
      timestamp: new Date(),
    };
  }

  private push(turn: ChatTurn) {
    this.turns = [...this.turns, turn];
  }
}
