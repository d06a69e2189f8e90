import type { ServiceClient } from "./api";
import type { Analysis } from "./types";

/** Cancellable what-if overlay: one request at a time, the previous one is
 * aborted when a new position comes in. */
export class AnalysisOverlay {
  enabled = false;
  current: Analysis | null = null;
  private controller: AbortController | null = null;

  constructor(
    private readonly client: ServiceClient,
    private readonly onUpdate: (analysis: Analysis | null) => void,
  ) {}

  toggle(enabled: boolean): void {
    this.enabled = enabled;
    if (!enabled) {
      this.cancel();
      this.current = null;
      this.onUpdate(null);
    }
  }

  cancel(): void {
    this.controller?.abort();
    this.controller = null;
  }

  async refresh(sessionId: string | null): Promise<void> {
    this.cancel();
    if (!this.enabled || !sessionId) return;
    const controller = new AbortController();
    this.controller = controller;
    try {
      const analysis = await this.client.getAnalysis(sessionId, controller.signal);
      if (!controller.signal.aborted) {
        this.current = analysis;
        this.onUpdate(analysis);
      }
    } catch (err) {
      if ((err as Error).name !== "AbortError" && !controller.signal.aborted) {
        this.current = null;
        this.onUpdate(null);
      }
    }
  }
}

/** Badge text per column: the successor's outcome, plus its value when the
 * budget allowed computing one. */
export function badgeFor(analysis: Analysis, col: number): string {
  const entry = analysis.options.find((option) => option.move === col);
  if (!entry) return "";
  if (entry.budget_exceeded) return "?";
  return entry.grundy ? `${entry.outcome} ${entry.grundy}` : entry.outcome ?? "";
}

export function renderBadges(
  container: HTMLElement,
  analysis: Analysis | null,
): void {
  const headers = container.querySelectorAll<HTMLElement>(".col-header");
  headers.forEach((header) => {
    header.querySelector(".badge")?.remove();
    header.classList.remove("best-move");
    if (!analysis) return;
    const col = Number(header.dataset.col);
    const badge = document.createElement("span");
    badge.className = "badge";
    badge.textContent = badgeFor(analysis, col);
    if (analysis.partial) {
      badge.classList.add("badge-partial");
      badge.title = "analysis budget exhausted; partial results";
    }
    if (analysis.best_move === col) {
      header.classList.add("best-move");
    }
    header.appendChild(badge);
  });
}
