/** Console state machine: group list navigation and keyboard-driven rating.
 *
 * Key bindings
 *   j / ArrowDown   next group          k / ArrowUp   previous group
 *   f               rate false positive
 *   i               rate intentional
 *   u               rate unintentional, then:
 *     y / n           faulty? (y asks for a category, n records directly)
 *     1 / 2 / 3       fault category
 *   Escape          cancel a pending unintentional rating
 */

import type { ApiClient, GroupDetail, GroupSummary, Metrics } from "./api.js";

export type RatingStage = "idle" | "awaiting-faulty" | "awaiting-category";

export interface ConsoleEvents {
  onListChanged?: () => void;
  onDetailChanged?: () => void;
  onMetricsChanged?: () => void;
  onStatus?: (message: string) => void;
}

export class ConsoleState {
  groups: GroupSummary[] = [];
  cursor = 0;
  detail: GroupDetail | null = null;
  metrics: Metrics | null = null;
  stage: RatingStage = "idle";
  assessor = "";

  constructor(
    private api: ApiClient,
    private events: ConsoleEvents = {},
  ) {}

  get current(): GroupSummary | null {
    return this.groups[this.cursor] ?? null;
  }

  async load(): Promise<void> {
    this.groups = await this.api.listGroups();
    this.cursor = Math.min(this.cursor, Math.max(0, this.groups.length - 1));
    this.events.onListChanged?.();
    await Promise.all([this.openCurrent(), this.refreshMetrics()]);
  }

  async refreshMetrics(): Promise<void> {
    this.metrics = await this.api.metrics();
    this.events.onMetricsChanged?.();
  }

  async openCurrent(): Promise<void> {
    const summary = this.current;
    this.detail = summary ? await this.api.getGroup(summary.id) : null;
    this.events.onDetailChanged?.();
  }

  private async move(delta: number): Promise<void> {
    if (!this.groups.length) return;
    const next = Math.min(this.groups.length - 1, Math.max(0, this.cursor + delta));
    if (next === this.cursor) return;
    this.cursor = next;
    this.stage = "idle";
    this.events.onListChanged?.();
    await this.openCurrent();
  }

  private async rate(
    verdict: "false_positive" | "intentional" | "unintentional",
    faulty?: boolean,
    category?: number,
  ): Promise<void> {
    const summary = this.current;
    if (!summary) return;
    await this.api.postAssessment(summary.id, {
      verdict,
      faulty,
      fault_category: category,
      assessor: this.assessor,
    });
    this.stage = "idle";
    this.events.onStatus?.(`rated ${summary.id}: ${verdict}`);
    // refresh the summary row, the open detail and the metrics panel
    this.groups = await this.api.listGroups();
    this.events.onListChanged?.();
    await Promise.all([this.openCurrent(), this.refreshMetrics()]);
  }

  /** Dispatch one key press; returns true when the key was consumed. */
  async handleKey(key: string): Promise<boolean> {
    if (this.stage === "awaiting-faulty") {
      if (key === "y") {
        this.stage = "awaiting-category";
        this.events.onStatus?.("fault category? (1/2/3)");
        return true;
      }
      if (key === "n") {
        await this.rate("unintentional", false);
        return true;
      }
      if (key === "Escape") {
        this.stage = "idle";
        this.events.onStatus?.("rating cancelled");
        return true;
      }
      return false;
    }
    if (this.stage === "awaiting-category") {
      if (key === "1" || key === "2" || key === "3") {
        await this.rate("unintentional", true, Number(key));
        return true;
      }
      if (key === "Escape") {
        this.stage = "idle";
        this.events.onStatus?.("rating cancelled");
        return true;
      }
      return false;
    }
    switch (key) {
      case "j":
      case "ArrowDown":
        await this.move(1);
        return true;
      case "k":
      case "ArrowUp":
        await this.move(-1);
        return true;
      case "f":
        await this.rate("false_positive");
        return true;
      case "i":
        await this.rate("intentional");
        return true;
      case "u":
        this.stage = "awaiting-faulty";
        this.events.onStatus?.("faulty? (y/n)");
        return true;
      default:
        return false;
    }
  }

  async selectById(id: string): Promise<boolean> {
    const index = this.groups.findIndex((g) => g.id === id);
    if (index < 0) return false;
    this.cursor = index;
    this.stage = "idle";
    this.events.onListChanged?.();
    await this.openCurrent();
    return true;
  }
}
