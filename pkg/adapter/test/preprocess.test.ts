import { describe, expect, it } from "vitest";

import { preprocess, removeQuotes } from "../src/preprocess.js";

describe("removeQuotes", () => {
  it("removes straight double quotes", () => {
    expect(removeQuotes('the "excel file"')).toBe("the excel file");
  });

  it("removes straight single quotes and apostrophes", () => {
    expect(removeQuotes("System-B's 'draft' record")).toBe("System-Bs draft record");
  });

  it("removes typographic quotes", () => {
    expect(removeQuotes("“daily” and ‘weekly’ and `legacy´")).toBe(
      "daily and weekly and legacy"
    );
  });
});

describe("preprocess", () => {
  it("keeps plain text untouched and yields no marks", () => {
    const { cleanText, marks } = preprocess('the "excel file"');
    expect(cleanText).toBe("the excel file");
    expect(marks).toEqual([]);
  });

  it("turns a line break into a mark before the following token", () => {
    const { cleanText, marks } = preprocess("a\nb");
    expect(cleanText).toBe("a b");
    expect(marks).toEqual([{ kind: "line_break", before_token: 1 }]);
  });

  it("turns bulleted lines into bullet marks", () => {
    const { cleanText, marks } = preprocess(
      "fields:\n• Include portfolio in the order,\n• Alert to operations"
    );
    expect(cleanText).toBe("fields: Include portfolio in the order, Alert to operations");
    expect(marks).toEqual([
      { kind: "bullet", before_token: 2 },
      { kind: "bullet", before_token: 8 },
    ]);
  });

  it("skips empty lines without emitting marks", () => {
    const { cleanText, marks } = preprocess("a\n\n\nb");
    expect(cleanText).toBe("a b");
    expect(marks).toEqual([{ kind: "line_break", before_token: 1 }]);
  });

  it("is idempotent on its own output", () => {
    const samples = [
      'the "excel file"',
      "fields:\n• Include portfolio,\n• Alert to operations",
      "When System-A receives an “alert”,\nSystem-B must act.",
    ];
    for (const sample of samples) {
      const once = preprocess(sample);
      const twice = preprocess(once.cleanText);
      expect(twice.cleanText).toBe(once.cleanText);
      expect(twice.marks).toEqual([]);
    }
  });

  it("leaves no quote characters behind", () => {
    const { cleanText } = preprocess("‘a’ \"b\" 'c' `d´ “e”");
    expect(cleanText).not.toMatch(/["'“”‘’`´]/);
  });
});
