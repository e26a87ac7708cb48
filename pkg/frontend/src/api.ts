/**
 * Typed client for the moderation service. The composer only ever calls
 * /v1/analyze and /v1/paraphrase; every other concern stays server-side.
 */

export interface RuleMatch {
  rule_id: string;
  start: number; // byte offsets into the UTF-8 encoding of the draft
  end: number;
  surface: string;
  classes: string[];
  severity: string;
}

export interface Suggestion {
  strategy: "synonym" | "mask" | "rewrite";
  text: string;
  changed_spans: { start: number; end: number; replacement: string }[];
  fallback: boolean;
  duplicate: boolean;
}

export interface AnalysisReport {
  verdict: "clean" | "offensive";
  classes: string[];
  score: { value: number; source: string };
  band: string;
  matches: RuleMatch[];
  sentiment: { compound: number; label: string };
  suggestions: Suggestion[];
  versions: Record<string, string>;
}

export class ServiceError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function postJson<T>(url: string, payload: unknown): Promise<T> {
  const resp = await fetch(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
  if (!resp.ok) {
    throw new ServiceError(resp.status, await resp.text());
  }
  return (await resp.json()) as T;
}

export class CrsClient {
  constructor(readonly baseUrl: string) {}

  analyze(text: string, mode?: string): Promise<AnalysisReport> {
    const payload: Record<string, string> = { text };
    if (mode) payload.mode = mode;
    return postJson<AnalysisReport>(`${this.baseUrl}/v1/analyze`, payload);
  }

  paraphrase(text: string): Promise<{ suggestions: Suggestion[] }> {
    return postJson(`${this.baseUrl}/v1/paraphrase`, { text });
  }
}

/**
 * The service reports byte offsets; DOM APIs want UTF-16 char offsets.
 * Builds a byte->char table for one draft snapshot.
 */
export function byteToCharTable(text: string): number[] {
  const encoder = new TextEncoder();
  const table: number[] = [];
  let byte = 0;
  let char = 0;
  for (const cp of text) {
    const width = encoder.encode(cp).length;
    for (let i = 0; i < width; i++) table[byte + i] = char;
    byte += width;
    char += cp.length; // surrogate pairs occupy two UTF-16 units
  }
  table[byte] = char;
  return table;
}

export interface CharSpan {
  start: number;
  end: number;
  classes: string[];
}

/** Converts match byte spans to char spans; spans outside the draft mark
 * the report as stale and yield null. */
export function matchesToCharSpans(
  text: string,
  matches: RuleMatch[],
): CharSpan[] | null {
  const table = byteToCharTable(text);
  const spans: CharSpan[] = [];
  for (const m of matches) {
    const start = table[m.start];
    const end = table[m.end];
    if (start === undefined || end === undefined) return null;
    spans.push({ start, end, classes: m.classes });
  }
  return spans;
}
