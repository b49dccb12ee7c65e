/** Session token storage. Lives in sessionStorage (never durable beyond
 * the browser session) with an in-memory fallback for headless tests. */

export interface SessionState {
  token: string;
  username: string;
  expiresAt: string;
}

interface StringStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

const KEY = "medtriage.session";

class MemoryStore implements StringStore {
  private values = new Map<string, string>();
  getItem(key: string): string | null {
    return this.values.get(key) ?? null;
  }
  setItem(key: string, value: string): void {
    this.values.set(key, value);
  }
  removeItem(key: string): void {
    this.values.delete(key);
  }
}

function defaultStore(): StringStore {
  const anyGlobal = globalThis as { sessionStorage?: StringStore };
  return anyGlobal.sessionStorage ?? new MemoryStore();
}

export class Session {
  private store: StringStore;

  constructor(store?: StringStore) {
    this.store = store ?? defaultStore();
  }

  current(): SessionState | null {
    const raw = this.store.getItem(KEY);
    if (!raw) return null;
    try {
      const state = JSON.parse(raw) as SessionState;
      if (new Date(state.expiresAt).getTime() <= Date.now()) {
        this.clear();
        return null;
      }
      return state;
    } catch {
      this.clear();
      return null;
    }
  }

  start(state: SessionState): void {
    this.store.setItem(KEY, JSON.stringify(state));
  }

  clear(): void {
    this.store.removeItem(KEY);
  }

  isAuthenticated(): boolean {
    return this.current() !== null;
  }
}
