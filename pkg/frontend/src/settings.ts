/** Persisted editor settings under one namespaced storage key, with an
 * in-memory fallback when no Web Storage is available (tests, Node). */

import type { EngineOptions } from "./engine.js";
import { DEFAULT_OPTIONS } from "./engine.js";

export const STORAGE_KEY = "kannada-ime.settings.v1";

export interface SettingsStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
}

export class MemoryStore implements SettingsStore {
  private map = new Map<string, string>();
  getItem(key: string): string | null {
    return this.map.get(key) ?? null;
  }
  setItem(key: string, value: string): void {
    this.map.set(key, value);
  }
}

function defaultStore(): SettingsStore {
  const g = globalThis as { localStorage?: SettingsStore };
  return g.localStorage ?? new MemoryStore();
}

export function loadSettings(store: SettingsStore = defaultStore()): EngineOptions {
  const raw = store.getItem(STORAGE_KEY);
  if (raw === null) return { ...DEFAULT_OPTIONS };
  try {
    const parsed = JSON.parse(raw) as Partial<EngineOptions>;
    return { ...DEFAULT_OPTIONS, ...parsed };
  } catch {
    return { ...DEFAULT_OPTIONS };
  }
}

export function saveSettings(
  options: EngineOptions,
  store: SettingsStore = defaultStore(),
): void {
  store.setItem(STORAGE_KEY, JSON.stringify(options));
}
