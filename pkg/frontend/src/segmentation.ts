/**
 * Client-side document segmentation. The engine is sentence-scoped, so
 * pasted text is split on sentence-final punctuation (kept with its
 * sentence) and on newlines. Deliberately simple; a wrong split just
 * becomes an extra card the translator can ignore.
 */
export function splitSentences(text: string): string[] {
  if (!text.trim()) return [];
  return text
    .split(/(?<=[.!?])\s+|\n/)
    .map((part) => part.trim())
    .filter((part) => part.length > 0);
}
