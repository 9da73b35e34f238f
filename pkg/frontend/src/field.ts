import type { FieldResponse } from './api';

export interface DecodedField {
  nx: number;
  ny: number;
  window: [number, number, number, number];
  // row-major, ny rows of nx cells; masked-out cells are NaN
  values: Float32Array;
  mask: Uint8Array;
}

function b64ToBytes(s: string): Uint8Array {
  const bin = atob(s);
  const out = new Uint8Array(bin.length);
  for (let i = 0; i < bin.length; i++) out[i] = bin.charCodeAt(i);
  return out;
}

export function decodeField(payload: FieldResponse): DecodedField {
  const [nx, ny] = payload.resolution;
  const n = nx * ny;
  const window = payload.window as [number, number, number, number];
  if (payload.values_b64 !== undefined) {
    const raw = b64ToBytes(payload.values_b64);
    if (raw.byteLength !== n * 4) {
      throw new Error(`field payload is ${raw.byteLength} bytes, expected ${n * 4}`);
    }
    const values = new Float32Array(raw.buffer, 0, n);
    let mask: Uint8Array;
    if (payload.mask_b64 !== undefined) {
      mask = b64ToBytes(payload.mask_b64);
      if (mask.byteLength !== n) throw new Error('mask length mismatch');
    } else {
      mask = new Uint8Array(n).fill(1);
    }
    return { nx, ny, window, values, mask };
  }
  if (payload.values !== undefined) {
    const values = new Float32Array(n);
    const mask = new Uint8Array(n);
    for (let r = 0; r < ny; r++) {
      const row = payload.values[r];
      const mrow = payload.mask ? payload.mask[r] : undefined;
      for (let c = 0; c < nx; c++) {
        const v = row[c];
        values[r * nx + c] = v === null ? NaN : v;
        mask[r * nx + c] = mrow ? (mrow[c] ? 1 : 0) : v === null ? 0 : 1;
      }
    }
    return { nx, ny, window, values, mask };
  }
  throw new Error('field payload has neither values_b64 nor values');
}

// FNV-1a over the raw float32 bytes plus the mask. Two fields built
// from identical service arrays hash identically, which is how the
// theta=0.5 pane is checked against the classic spec.
export function fieldChecksum(f: DecodedField): string {
  const bytes = new Uint8Array(f.values.buffer, f.values.byteOffset, f.values.length * 4);
  let h = 0x811c9dc5;
  for (let i = 0; i < bytes.length; i++) {
    h ^= bytes[i];
    h = Math.imul(h, 0x01000193) >>> 0;
  }
  for (let i = 0; i < f.mask.length; i++) {
    h ^= f.mask[i];
    h = Math.imul(h, 0x01000193) >>> 0;
  }
  return h.toString(16).padStart(8, '0');
}

// Blue to red through white, for scores in [0, 1]. Out-of-range values
// (forced epsilon regimes overshoot) saturate at the ends.
export function colorFor(t: number): string {
  if (Number.isNaN(t)) return 'transparent';
  const x = Math.max(0, Math.min(1, t));
  const lo = [33, 102, 172];
  const hi = [178, 24, 43];
  const mid = [247, 247, 247];
  const mix = (a: number[], b: number[], u: number) =>
    a.map((c, i) => Math.round(c + (b[i] - c) * u));
  const rgb = x < 0.5 ? mix(lo, mid, x * 2) : mix(mid, hi, (x - 0.5) * 2);
  return `rgb(${rgb[0]},${rgb[1]},${rgb[2]})`;
}

// Cheap isoline effect: mark cells whose value crosses a level between
// neighbours. Returns a boolean lattice aligned with the field.
export function isolineCells(f: DecodedField, levels: number[]): Uint8Array {
  const out = new Uint8Array(f.nx * f.ny);
  for (let r = 0; r < f.ny; r++) {
    for (let c = 0; c < f.nx; c++) {
      const i = r * f.nx + c;
      const v = f.values[i];
      if (Number.isNaN(v)) continue;
      const right = c + 1 < f.nx ? f.values[i + 1] : NaN;
      const up = r + 1 < f.ny ? f.values[i + f.nx] : NaN;
      for (const L of levels) {
        const crossR = !Number.isNaN(right) && (v - L) * (right - L) < 0;
        const crossU = !Number.isNaN(up) && (v - L) * (up - L) < 0;
        if (crossR || crossU || v === L) {
          out[i] = 1;
          break;
        }
      }
    }
  }
  return out;
}
