export type Listener<T> = (state: T) => void;

export class Store<T extends object> {
  private state: T;
  private listeners: Listener<T>[] = [];

  constructor(initial: T) {
    this.state = initial;
  }

  get(): T {
    return this.state;
  }

  set(patch: Partial<T>) {
    this.state = { ...this.state, ...patch };
    for (const fn of this.listeners.slice()) fn(this.state);
  }

  subscribe(fn: Listener<T>): () => void {
    this.listeners.push(fn);
    return () => {
      const i = this.listeners.indexOf(fn);
      if (i >= 0) this.listeners.splice(i, 1);
    };
  }
}
