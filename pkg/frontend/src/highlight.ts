/** Mapping from pair alignments to highlighted unit and line positions. */

import type { CloneDoc, GroupDetail, PairDoc } from "./api.js";

/** Unit indices to highlight in one clone pane for one pair. */
export function highlightedUnits(pair: PairDoc, side: "a" | "b"): number[] {
  const edits = side === "a" ? pair.edits_a : pair.edits_b;
  return [...edits].sort((x, y) => x - y);
}

/**
 * Unit indices to highlight per clone when showing the whole group:
 * a unit is marked if any pair touching that clone edits it.
 */
export function groupHighlights(group: GroupDetail): Map<number, Set<number>> {
  const marks = new Map<number, Set<number>>();
  group.clones.forEach((_, index) => marks.set(index, new Set()));
  for (const pair of group.pairs) {
    for (const idx of pair.edits_a) marks.get(pair.a)!.add(idx);
    for (const idx of pair.edits_b) marks.get(pair.b)!.add(idx);
  }
  return marks;
}

/** Source line numbers covered by the highlighted units of one clone. */
export function highlightedLines(clone: CloneDoc, unitIndices: Iterable<number>): Set<number> {
  const lines = new Set<number>();
  for (const idx of unitIndices) {
    const unit = clone.units[idx];
    if (!unit) continue;
    for (let line = unit.first_line; line <= unit.last_line; line++) {
      lines.add(line);
    }
  }
  return lines;
}
