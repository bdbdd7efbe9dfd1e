/** Binding to the composition engine.
 *
 * The UI only ever talks to the `Engine` interface; `CliEngine` is the
 * Node-side implementation that shells out to the `kannada-ime` executable
 * (useful for tests and for a local bridge server).  A browser deployment
 * supplies its own implementation (e.g. an HTTP bridge) with the same shape.
 */

import { spawn } from "node:child_process";

export type DefaultVowel = "a" | "null";
export type OhokMode = "off" | "so" | "ko" | "ao";

export interface EngineOptions {
  defaultVowel: DefaultVowel;
  mode: OhokMode;
  strictRules: boolean;
}

export const DEFAULT_OPTIONS: EngineOptions = {
  defaultVowel: "a",
  mode: "off",
  strictRules: true,
};

export interface Engine {
  /** Rendered buffer after each keystroke of the script (one entry per
   * stroke; empty array for an empty script). */
  trace(script: string, options: EngineOptions): Promise<string[]>;
}

export class CliEngine implements Engine {
  constructor(private readonly executable: string = "kannada-ime") {}

  trace(script: string, options: EngineOptions): Promise<string[]> {
    if (script.trim() === "") return Promise.resolve([]);
    const args = [
      "compose",
      "--trace",
      "--default-vowel",
      options.defaultVowel,
      "--mode",
      options.mode,
    ];
    if (!options.strictRules) args.push("--no-strict");
    args.push("-");
    return new Promise((resolve, reject) => {
      const child = spawn(this.executable, args, {
        stdio: ["pipe", "pipe", "pipe"],
      });
      let out = "";
      let err = "";
      child.stdout.setEncoding("utf-8");
      child.stderr.setEncoding("utf-8");
      child.stdout.on("data", (chunk: string) => (out += chunk));
      child.stderr.on("data", (chunk: string) => (err += chunk));
      child.on("error", reject);
      child.on("close", (code) => {
        if (code === 0) {
          resolve(out.length === 0 ? [] : out.replace(/\n$/, "").split("\n"));
        } else {
          reject(new Error(`engine exited with ${code}: ${err.trim()}`));
        }
      });
      child.stdin.write(script, "utf-8");
      child.stdin.end();
    });
  }
}

export async function renderScript(
  engine: Engine,
  script: string,
  options: EngineOptions,
): Promise<string> {
  const trace = await engine.trace(script, options);
  return trace.length === 0 ? "" : trace[trace.length - 1];
}
