import { vi } from "vitest";

import type { AnalysisReport, RuleMatch, Suggestion } from "../src/api.js";

export function cleanReport(): AnalysisReport {
  return {
    verdict: "clean",
    classes: [],
    score: { value: 0, source: "local" },
    band: "clean",
    matches: [],
    sentiment: { compound: 0, label: "neutral" },
    suggestions: [],
    versions: { ruleset: "default-1" },
  };
}

export function offensiveReport(
  text: string,
  surface: string,
  suggestions: Suggestion[] = [],
): AnalysisReport {
  const bytes = new TextEncoder().encode(text);
  const target = new TextEncoder().encode(surface);
  let start = -1;
  outer: for (let i = 0; i + target.length <= bytes.length; i++) {
    for (let j = 0; j < target.length; j++) {
      if (bytes[i + j] !== target[j]) continue outer;
    }
    start = i;
    break;
  }
  if (start < 0) throw new Error(`surface ${surface} not in ${text}`);
  const match: RuleMatch = {
    rule_id: "pe01",
    start,
    end: start + target.length,
    surface,
    classes: ["Personal"],
    severity: "strong",
  };
  return {
    ...cleanReport(),
    verdict: "offensive",
    classes: ["Personal"],
    score: { value: 0.3, source: "local" },
    band: "gray",
    matches: [match],
    suggestions,
  };
}

export function maskSuggestion(text: string): Suggestion {
  return {
    strategy: "mask",
    text,
    changed_spans: [],
    fallback: false,
    duplicate: false,
  };
}

export function fallbackRewrite(text: string): Suggestion {
  return {
    strategy: "rewrite",
    text,
    changed_spans: [],
    fallback: true,
    duplicate: false,
  };
}

/** fetch stub that answers /v1/analyze from a handler and counts calls. */
export function mockFetch(
  handler: (text: string) => AnalysisReport,
): { calls: string[] } {
  const calls: string[] = [];
  vi.stubGlobal(
    "fetch",
    vi.fn(async (_url: string, init: RequestInit) => {
      const body = JSON.parse(String(init.body)) as { text: string };
      calls.push(body.text);
      return {
        ok: true,
        status: 200,
        json: async () => handler(body.text),
        text: async () => "",
      } as Response;
    }),
  );
  return { calls };
}
