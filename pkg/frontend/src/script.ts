/** Encoding of captured strokes as the engine's keystroke-script grammar:
 * one whitespace-separated token per stroke, uppercase for shifted letters,
 * a `+` suffix for holds, and angle-bracket names for the rest.
 */

import type { Stroke } from "./keycapture.js";

export function strokeToToken(stroke: Stroke): string {
  switch (stroke.kind) {
    case "letter": {
      const letter = stroke.shift ? stroke.base.toUpperCase() : stroke.base;
      return stroke.hold ? letter + "+" : letter;
    }
    case "digit":
      return stroke.base;
    case "space":
      return "<SP>";
    case "zwj":
      return "<ZWJ>";
    case "zwnj":
      return "<ZWNJ>";
    case "backspace":
      switch (stroke.modifier) {
        case "none":
          return "<BS>";
        case "alt":
          return "<A-BS>";
        case "shift":
          return "<S-BS>";
        case "ctrl":
          return "<C-BS>";
      }
  }
}

export function encodeScript(strokes: readonly Stroke[]): string {
  return strokes.map(strokeToToken).join(" ");
}
