/** Editor session: an append-only stroke log plus a frozen text prefix.
 *
 * Changing engine options mid-session must not retroactively re-interpret
 * what was already typed, so the current rendering is frozen into the
 * prefix and the stroke log restarts under the new options.  The displayed
 * text is always `frozenPrefix + engine rendering of the live strokes`.
 */

import type { Engine, EngineOptions } from "./engine.js";
import { DEFAULT_OPTIONS, renderScript } from "./engine.js";
import type { Stroke } from "./keycapture.js";
import { encodeScript } from "./script.js";

export class EditorSession {
  private strokes: Stroke[] = [];
  private frozenPrefix = "";
  private opts: EngineOptions;

  constructor(
    private readonly engine: Engine,
    options: EngineOptions = DEFAULT_OPTIONS,
  ) {
    this.opts = { ...options };
  }

  get options(): EngineOptions {
    return { ...this.opts };
  }

  get script(): string {
    return encodeScript(this.strokes);
  }

  press(stroke: Stroke): void {
    this.strokes.push(stroke);
  }

  /** Freeze what is on screen and switch options for subsequent strokes. */
  async setOptions(options: EngineOptions): Promise<void> {
    this.frozenPrefix = await this.text();
    this.strokes = [];
    this.opts = { ...options };
  }

  async text(): Promise<string> {
    return this.frozenPrefix + (await renderScript(this.engine, this.script, this.opts));
  }

  async clear(): Promise<void> {
    this.frozenPrefix = "";
    this.strokes = [];
  }
}
