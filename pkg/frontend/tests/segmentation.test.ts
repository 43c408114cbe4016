import { describe, expect, it } from "vitest";
import { splitSentences } from "../src/segmentation.js";

describe("splitSentences", () => {
  it("splits on sentence-final punctuation, keeping it", () => {
    expect(splitSentences("She made fun of the mayor. They do not know her!")).toEqual([
      "She made fun of the mayor.",
      "They do not know her!",
    ]);
  });

  it("splits on newlines too", () => {
    expect(splitSentences("one way or the other\nyou")).toEqual([
      "one way or the other",
      "you",
    ]);
  });

  it("keeps a fragment without terminal punctuation", () => {
    expect(splitSentences("John loses hope")).toEqual(["John loses hope"]);
  });

  it("drops empty input and blank fragments", () => {
    expect(splitSentences("")).toEqual([]);
    expect(splitSentences("  \n  ")).toEqual([]);
    expect(splitSentences("Stop.   \n\n  Go!")).toEqual(["Stop.", "Go!"]);
  });

  it("does not split inside abbreviating periods followed by no space", () => {
    expect(splitSentences("a.b stays together")).toEqual(["a.b stays together"]);
  });
});
