/** DOM wiring: connects key events on an input surface to a HoldDetector,
 * an EditorSession, and the settings controls.  The engine is injected so
 * the same wiring works against any transport.
 */

import type { Engine, EngineOptions } from "./engine.js";
import { EditorSession } from "./editor.js";
import { DEFAULT_HOLD_THRESHOLD_MS, HoldDetector } from "./keycapture.js";
import { loadSettings, saveSettings, type SettingsStore } from "./settings.js";

export interface UiElements {
  surface: {
    addEventListener(type: string, handler: (ev: KeyboardEvent) => void): void;
  };
  output: { textContent: string | null };
  defaultVowelSelect?: HTMLSelectElement;
  modeSelect?: HTMLSelectElement;
  strictCheckbox?: HTMLInputElement;
}

export interface UiHandle {
  session: EditorSession;
  refresh(): Promise<void>;
  applyOptions(options: EngineOptions): Promise<void>;
}

export function setupEditor(
  elements: UiElements,
  engine: Engine,
  store?: SettingsStore,
  holdThresholdMs: number = DEFAULT_HOLD_THRESHOLD_MS,
): UiHandle {
  const session = new EditorSession(engine, loadSettings(store));

  const refresh = async () => {
    elements.output.textContent = await session.text();
  };

  const applyOptions = async (options: EngineOptions) => {
    await session.setOptions(options);
    saveSettings(options, store);
    await refresh();
  };

  const detector = new HoldDetector((stroke) => {
    session.press(stroke);
    void refresh();
  }, holdThresholdMs);

  elements.surface.addEventListener("keydown", (ev: KeyboardEvent) => {
    detector.keydown({
      key: ev.key,
      timeMs: ev.timeStamp,
      repeat: ev.repeat,
      shiftKey: ev.shiftKey,
      altKey: ev.altKey,
      ctrlKey: ev.ctrlKey,
    });
    ev.preventDefault?.();
  });
  elements.surface.addEventListener("keyup", (ev: KeyboardEvent) => {
    detector.keyup({ key: ev.key, timeMs: ev.timeStamp });
  });

  const readControls = (): EngineOptions => ({
    defaultVowel:
      (elements.defaultVowelSelect?.value as EngineOptions["defaultVowel"]) ??
      session.options.defaultVowel,
    mode: (elements.modeSelect?.value as EngineOptions["mode"]) ?? session.options.mode,
    strictRules: elements.strictCheckbox?.checked ?? session.options.strictRules,
  });

  for (const control of [
    elements.defaultVowelSelect,
    elements.modeSelect,
    elements.strictCheckbox,
  ]) {
    control?.addEventListener("change", () => void applyOptions(readControls()));
  }

  return { session, refresh, applyOptions };
}
