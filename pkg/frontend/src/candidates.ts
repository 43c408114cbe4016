import type { ResultDoc, Segment } from "./types.js";

// Generation gaps come back wrapped in white brackets.
export const GAP_OPEN = "⟦";
export const GAP_CLOSE = "⟧";

export type SegmentKind = "plain" | "untranslated" | "gap";

export interface DisplaySegment {
  text: string;
  kind: SegmentKind;
}

export interface CandidateRow {
  /** Index into the engine's output list; -1 for the manual-edit row. */
  index: number;
  manual: boolean;
  text: string;
  segments: DisplaySegment[];
}

function classify(segment: Segment): DisplaySegment {
  if (segment.untranslated) return { text: segment.text, kind: "untranslated" };
  if (segment.text.startsWith(GAP_OPEN) && segment.text.endsWith(GAP_CLOSE)) {
    return { text: segment.text, kind: "gap" };
  }
  return { text: segment.text, kind: "plain" };
}

/**
 * One row per engine output, in engine order (the order is meaningful
 * and deterministic). An empty output list renders a single manual-edit
 * row so the translator always has somewhere to type.
 */
export function renderCandidates(doc: ResultDoc): CandidateRow[] {
  if (doc.outputs.length === 0) {
    return [
      {
        index: -1,
        manual: true,
        text: "",
        segments: [{ text: "untranslatable, edit manually", kind: "untranslated" }],
      },
    ];
  }
  return doc.outputs.map((output, index) => {
    const segments = output.map(classify);
    return {
      index,
      manual: false,
      text: output.map((segment) => segment.text).join(" "),
      segments,
    };
  });
}

/** The plain texts offered to the translator, for the acceptance record. */
export function offeredTexts(rows: CandidateRow[]): string[] {
  return rows.filter((row) => !row.manual).map((row) => row.text);
}
