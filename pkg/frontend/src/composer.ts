/**
 * Comment composer widget: a textarea with a mirrored highlight layer,
 * suggestion cards, and a submit button that asks for confirmation when
 * the current draft is still flagged.
 *
 * All detection logic lives server-side; this class only schedules
 * analyze calls, renders the latest report, and applies suggestions the
 * user explicitly accepts.
 */

import {
  AnalysisReport,
  CrsClient,
  Suggestion,
  matchesToCharSpans,
} from "./api.js";
import { DEBOUNCE_MS, Debounced, debounce } from "./debounce.js";

export interface ComposerOptions {
  /** Called when the user submits (and confirms, if flagged). */
  onSubmit?: (text: string) => void;
  /** Confirmation hook; defaults to window.confirm. */
  confirm?: (message: string) => boolean;
  /** Debounce window for analyze calls while typing. */
  debounceMs?: number;
  /** Show offence class names next to highlights. */
  showClasses?: boolean;
}

const STRATEGY_LABELS: Record<string, string> = {
  synonym: "Milder wording",
  mask: "Mask the term",
  rewrite: "Rewrite",
};

function escapeHtml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export class Composer {
  readonly textarea: HTMLTextAreaElement;
  readonly highlightLayer: HTMLElement;
  readonly suggestionPanel: HTMLElement;
  readonly banner: HTMLElement;
  readonly submitButton: HTMLButtonElement;

  private report: AnalysisReport | null = null;
  private reportDraft = "";
  private nextSeq = 0;
  private lastApplied = -1;
  private pending = false;
  private readonly scheduled: Debounced<[]>;
  private readonly opts: ComposerOptions;

  constructor(
    root: HTMLElement,
    private readonly client: CrsClient,
    opts: ComposerOptions = {},
  ) {
    this.opts = opts;
    root.classList.add("crs-composer");
    this.highlightLayer = document.createElement("div");
    this.highlightLayer.className = "crs-highlights";
    this.highlightLayer.setAttribute("aria-hidden", "true");
    this.textarea = document.createElement("textarea");
    this.textarea.className = "crs-input";
    this.banner = document.createElement("div");
    this.banner.className = "crs-banner";
    this.banner.hidden = true;
    this.suggestionPanel = document.createElement("div");
    this.suggestionPanel.className = "crs-suggestions";
    this.submitButton = document.createElement("button");
    this.submitButton.className = "crs-submit";
    this.submitButton.textContent = "Post comment";
    root.append(
      this.highlightLayer,
      this.textarea,
      this.banner,
      this.suggestionPanel,
      this.submitButton,
    );

    this.scheduled = debounce(
      () => void this.analyzeNow(),
      opts.debounceMs ?? DEBOUNCE_MS,
    );
    this.textarea.addEventListener("input", () => this.onInput());
    this.submitButton.addEventListener("click", () => this.submit());
  }

  get draft(): string {
    return this.textarea.value;
  }

  get lastReport(): AnalysisReport | null {
    return this.report;
  }

  get requestPending(): boolean {
    return this.pending;
  }

  /** Typing only schedules work; the draft is never blocked on the net. */
  onInput(): void {
    this.scheduled();
  }

  /** Issues one analyze call; stale responses are dropped by sequence. */
  async analyzeNow(): Promise<void> {
    const seq = this.nextSeq++;
    const snapshot = this.draft;
    this.pending = true;
    try {
      const report = await this.client.analyze(snapshot);
      if (seq <= this.lastApplied) return; // out-of-order response
      this.lastApplied = seq;
      this.report = report;
      this.reportDraft = snapshot;
      this.banner.hidden = true;
      this.renderReport();
    } catch (err) {
      this.banner.textContent = "analysis service unreachable";
      this.banner.hidden = false;
    } finally {
      this.pending = false;
    }
  }

  /** Renders highlights and suggestion cards for the current report. */
  renderReport(): void {
    const report = this.report;
    this.highlightLayer.innerHTML = "";
    this.suggestionPanel.innerHTML = "";
    if (!report || this.reportDraft !== this.draft) return;

    const spans = matchesToCharSpans(this.reportDraft, report.matches);
    if (spans === null) {
      this.report = null; // stale or inconsistent: discard
      return;
    }
    const showClasses = this.opts.showClasses ?? true;
    const parts: string[] = [];
    let pos = 0;
    for (const span of spans) {
      parts.push(escapeHtml(this.reportDraft.slice(pos, span.start)));
      const title = span.classes.join(", ");
      const label = showClasses && title ? ` data-classes="${title}"` : "";
      parts.push(
        `<mark class="crs-hl" title="${title}"${label}>` +
          escapeHtml(this.reportDraft.slice(span.start, span.end)) +
          "</mark>",
      );
      pos = span.end;
    }
    parts.push(escapeHtml(this.reportDraft.slice(pos)));
    this.highlightLayer.innerHTML = parts.join("");

    report.suggestions.forEach((s, i) => {
      this.suggestionPanel.append(this.suggestionCard(s, i));
    });
  }

  private suggestionCard(s: Suggestion, index: number): HTMLElement {
    const card = document.createElement("div");
    card.className = "crs-card";
    const head = document.createElement("div");
    head.className = "crs-card-strategy";
    head.textContent = STRATEGY_LABELS[s.strategy] ?? s.strategy;
    if (s.fallback) {
      const badge = document.createElement("span");
      badge.className = "crs-badge";
      badge.textContent = "rewriter offline";
      head.append(badge);
    }
    const body = document.createElement("div");
    body.className = "crs-card-text";
    body.textContent = s.text;
    const accept = document.createElement("button");
    accept.className = "crs-accept";
    accept.textContent = "Use this";
    accept.addEventListener("click", () => void this.acceptSuggestion(index));
    card.append(head, body, accept);
    return card;
  }

  /** Replaces the draft and re-analyzes immediately (no debounce). */
  async acceptSuggestion(index: number): Promise<void> {
    const s = this.report?.suggestions[index];
    if (!s) return;
    this.scheduled.cancel();
    this.textarea.value = s.text;
    await this.analyzeNow();
  }

  /** Advisory gate: flagged drafts need confirmation, never a hard block. */
  submit(): boolean {
    const flagged =
      this.report !== null &&
      this.reportDraft === this.draft &&
      this.report.verdict === "offensive";
    if (flagged) {
      const ask =
        this.opts.confirm ??
        ((m: string) => (globalThis as { confirm?: (m: string) => boolean })
          .confirm?.(m) ?? true);
      if (!ask("This comment is still flagged as offensive. Post anyway?")) {
        return false;
      }
    }
    this.opts.onSubmit?.(this.draft);
    return true;
  }
}
