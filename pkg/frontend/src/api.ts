// Typed client for the retrieval service. The UI talks to the server
// exclusively through these two calls.

export interface QueryResult {
  doc_id: string;
  heading: string;
  country: string;
  snippet: string;
  uri: string;
  heading_rank: number;
  content_rank: number;
  borda_points: number;
  final_rank: number;
}

export interface QueryResponse {
  results: QueryResult[];
  latency_ms: number;
  detected_countries: string[];
}

export interface HealthResponse {
  status: string;
  documents: number;
  version: number;
  embedding_dim: number;
}

/** Structured service error ({"error": code, "message": ...}). */
export class ApiError extends Error {
  constructor(
    public readonly code: string,
    message: string,
    public readonly status: number,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

async function parseError(response: Response): Promise<ApiError> {
  try {
    const body = await response.json();
    return new ApiError(body.error ?? 'unknown', body.message ?? response.statusText, response.status);
  } catch {
    return new ApiError('unknown', response.statusText, response.status);
  }
}

export async function queryDocuments(
  baseUrl: string,
  text: string,
  topK = 3,
): Promise<QueryResponse> {
  const response = await fetch(`${baseUrl}/v1/query`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify({ text, top_k: topK }),
  });
  if (!response.ok) {
    throw await parseError(response);
  }
  return response.json();
}

export async function fetchHealth(baseUrl: string): Promise<HealthResponse> {
  const response = await fetch(`${baseUrl}/v1/health`);
  if (!response.ok) {
    throw await parseError(response);
  }
  return response.json();
}
