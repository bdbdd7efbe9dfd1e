/** Press-and-hold key capture.
 *
 * A keystroke is classified on key *release*: held at least `holdThresholdMs`
 * means a hold, anything shorter is a tap.  Auto-repeat keydown events are
 * ignored, and each physical press yields exactly one stroke.
 */

export type BackspaceModifier = "none" | "alt" | "shift" | "ctrl";

export type Stroke =
  | { kind: "letter"; base: string; shift: boolean; hold: boolean }
  | { kind: "digit"; base: string }
  | { kind: "space" }
  | { kind: "backspace"; modifier: BackspaceModifier }
  | { kind: "zwj" }
  | { kind: "zwnj" };

export interface KeyDownInfo {
  key: string;
  timeMs: number;
  repeat?: boolean;
  shiftKey?: boolean;
  altKey?: boolean;
  ctrlKey?: boolean;
}

export interface KeyUpInfo {
  key: string;
  timeMs: number;
}

interface PendingPress {
  downAt: number;
  shift: boolean;
}

export const DEFAULT_HOLD_THRESHOLD_MS = 350;

export class HoldDetector {
  private pending = new Map<string, PendingPress>();

  constructor(
    private readonly emit: (stroke: Stroke) => void,
    private readonly holdThresholdMs: number = DEFAULT_HOLD_THRESHOLD_MS,
  ) {}

  keydown(info: KeyDownInfo): void {
    if (info.repeat) return; // OS auto-repeat is not a new press
    const key = info.key;
    if (key === "Backspace") {
      // deletes act immediately; duration carries no meaning
      this.emit({ kind: "backspace", modifier: modifierOf(info) });
      return;
    }
    if (!isCapturable(key)) return;
    if (this.pending.has(normalize(key))) return; // already down
    this.pending.set(normalize(key), {
      downAt: info.timeMs,
      shift: info.shiftKey ?? isUpperAlpha(key),
    });
  }

  keyup(info: KeyUpInfo): void {
    const press = this.pending.get(normalize(info.key));
    if (press === undefined) return;
    this.pending.delete(normalize(info.key));
    const held = info.timeMs - press.downAt >= this.holdThresholdMs;
    this.emit(strokeFor(info.key, press.shift, held));
  }
}

function modifierOf(info: KeyDownInfo): BackspaceModifier {
  if (info.altKey) return "alt";
  if (info.ctrlKey) return "ctrl";
  if (info.shiftKey) return "shift";
  return "none";
}

function isUpperAlpha(key: string): boolean {
  return key.length === 1 && key >= "A" && key <= "Z";
}

function isCapturable(key: string): boolean {
  if (key === " " || key === "\u200d" || key === "\u200c") return true;
  return /^[a-zA-Z0-9]$/.test(key);
}

function normalize(key: string): string {
  return key.length === 1 ? key.toLowerCase() : key;
}

function strokeFor(key: string, shift: boolean, hold: boolean): Stroke {
  if (key === " ") return { kind: "space" };
  if (key === "\u200d") return { kind: "zwj" };
  if (key === "\u200c") return { kind: "zwnj" };
  if (/^[0-9]$/.test(key)) return { kind: "digit", base: key };
  return { kind: "letter", base: key.toLowerCase(), shift, hold };
}
