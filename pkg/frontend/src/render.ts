/** HTML rendering helpers. Pure string producers so they are testable
 * without a DOM; main.ts assigns the results to innerHTML. */

import type { CloneDoc, GroupDetail, GroupSummary, Metrics } from "./api.js";
import { groupHighlights, highlightedLines } from "./highlight.js";

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderGroupList(groups: GroupSummary[], cursor: number): string {
  const rows = groups.map((g, i) => {
    const classes = ["group-row", g.kind];
    if (i === cursor) classes.push("selected");
    if (g.assessed) classes.push("assessed");
    const verdict = g.verdict ? ` · ${escapeHtml(g.verdict)}` : "";
    return (
      `<li class="${classes.join(" ")}" data-id="${g.id}">` +
      `<span class="kind">${g.kind}</span> ` +
      `<span class="files">${escapeHtml(g.files.join(", "))}</span> ` +
      `<span class="length">${g.length} units${verdict}</span></li>`
    );
  });
  return `<ul class="group-list">${rows.join("")}</ul>`;
}

export function renderClonePane(clone: CloneDoc, highlighted: Set<number>): string {
  const markedLines = highlightedLines(clone, highlighted);
  const body = clone.excerpt
    ? clone.excerpt.lines
        .map((line, offset) => {
          const lineNo = clone.excerpt!.first_line + offset;
          const inClone = lineNo >= clone.first_line && lineNo <= clone.last_line;
          const classes = ["line"];
          if (inClone) classes.push("clone");
          if (markedLines.has(lineNo)) classes.push("edited");
          return (
            `<div class="${classes.join(" ")}" data-line="${lineNo}">` +
            `<span class="no">${lineNo}</span>` +
            `<span class="src">${escapeHtml(line)}</span></div>`
          );
        })
        .join("")
    : `<div class="line missing">source unavailable</div>`;
  const edited = [...highlighted].sort((a, b) => a - b);
  return (
    `<section class="clone-pane" data-file="${escapeHtml(clone.file)}"` +
    ` data-edited-units="${edited.join(",")}">` +
    `<header>${escapeHtml(clone.file)}:${clone.first_line}-${clone.last_line}</header>` +
    `${body}</section>`
  );
}

export function renderGroupDetail(group: GroupDetail): string {
  const marks = groupHighlights(group);
  const panes = group.clones
    .map((clone, index) => renderClonePane(clone, marks.get(index) ?? new Set()))
    .join("");
  const assessment = group.assessment
    ? `<p class="assessment">rated: ${escapeHtml(group.assessment.verdict)}` +
      (group.assessment.faulty ? ` (faulty, category ${group.assessment.fault_category})` : "") +
      `</p>`
    : `<p class="assessment none">not yet rated</p>`;
  return (
    `<article class="group-detail ${group.kind}" data-id="${group.id}">` +
    `<h2>${group.kind} clone group · ${group.clones.length} clones</h2>` +
    assessment +
    `<div class="panes">${panes}</div></article>`
  );
}

const METRIC_ROWS: [keyof Metrics, string, number][] = [
  ["precision_exact", "Precision exact clone groups", 2],
  ["precision_inconsistent", "Precision inconsistent clone groups", 2],
  ["clone_groups", "Clone groups |C|", 0],
  ["inconsistent_groups", "Inconsistent clone groups |IC|", 0],
  ["unintentional_groups", "Unintentionally inconsistent clone groups |UIC|", 0],
  ["faulty_groups", "Faulty clone groups |F|", 0],
  ["ratio_ic", "RQ 1 |IC|/|C|", 2],
  ["ratio_uic", "RQ 2 |UIC|/|IC|", 2],
  ["ratio_f", "RQ 3 |F|/|IC|", 2],
  ["ratio_f_uic", "Faulty in UIC |F|/|UIC|", 2],
  ["inconsistent_logical_lines", "Inconsistent logical lines", 0],
  ["fault_density_per_kloc", "Fault density in kLOC^-1", 1],
];

export function formatMetric(value: number | null, digits: number): string {
  if (value === null) return "---";
  return digits > 0 ? value.toFixed(digits) : String(value);
}

export function renderMetricsPanel(metrics: Metrics): string {
  const rows = METRIC_ROWS.map(
    ([key, label, digits]) =>
      `<tr data-metric="${key}"><td>${label}</td>` +
      `<td class="value">${formatMetric(metrics[key], digits)}</td></tr>`,
  );
  return `<table class="metrics">${rows.join("")}</table>`;
}
