import { describe, expect, it } from "vitest";

import type { Stroke } from "../src/keycapture.js";
import { encodeScript, strokeToToken } from "../src/script.js";

const letter = (base: string, shift = false, hold = false): Stroke => ({
  kind: "letter",
  base,
  shift,
  hold,
});

describe("strokeToToken", () => {
  it("encodes taps, shifts and holds", () => {
    expect(strokeToToken(letter("k"))).toBe("k");
    expect(strokeToToken(letter("a", true))).toBe("A");
    expect(strokeToToken(letter("n", false, true))).toBe("n+");
    expect(strokeToToken(letter("t", true, true))).toBe("T+");
  });

  it("encodes specials", () => {
    expect(strokeToToken({ kind: "space" })).toBe("<SP>");
    expect(strokeToToken({ kind: "zwj" })).toBe("<ZWJ>");
    expect(strokeToToken({ kind: "zwnj" })).toBe("<ZWNJ>");
    expect(strokeToToken({ kind: "digit", base: "4" })).toBe("4");
    expect(strokeToToken({ kind: "backspace", modifier: "none" })).toBe("<BS>");
    expect(strokeToToken({ kind: "backspace", modifier: "alt" })).toBe("<A-BS>");
    expect(strokeToToken({ kind: "backspace", modifier: "shift" })).toBe("<S-BS>");
    expect(strokeToToken({ kind: "backspace", modifier: "ctrl" })).toBe("<C-BS>");
  });
});

describe("encodeScript", () => {
  it("joins tokens with single spaces", () => {
    expect(
      encodeScript([letter("k"), letter("n", false, true), letter("w")]),
    ).toBe("k n+ w");
    expect(encodeScript([])).toBe("");
  });
});
