import { afterAll, beforeAll, describe, expect, it } from 'vitest';
import { spawn, ChildProcess } from 'node:child_process';
import { readFileSync } from 'node:fs';
import { fileURLToPath } from 'node:url';

import {
  createSession,
  getBoundary,
  getEpsilonLimit,
  getWmsd,
  postCheckProperty,
  postField,
  postRank,
  setApiBase,
} from '../src/api';
import { decodeField, fieldChecksum } from '../src/field';
import { buildSubmitSpec, canSubmit } from '../src/spec';

const HOST = '127.0.0.1';
const PORT = 8000 + 700 + Math.floor(Math.random() * 900);
const BASE = `http://${HOST}:${PORT}`;

const DATA = readFileSync(fileURLToPath(new URL('../../data/buses.csv', import.meta.url)));
const CONFIG = readFileSync(fileURLToPath(new URL('../../data/buses_config.yaml', import.meta.url)));

let server: ChildProcess;
let sessionId: string;

async function waitForServer() {
  for (let i = 0; i < 120; i++) {
    try {
      const r = await fetch(`${BASE}/api/session/warmup/wmsd`);
      if (r.status === 404) return;
    } catch {
      // not listening yet
    }
    await new Promise((res) => setTimeout(res, 250));
  }
  throw new Error(`service did not come up on ${BASE}`);
}

beforeAll(async () => {
  server = spawn('python3', [
    '-m', 'uvicorn', 'wmsdrank.service:app', '--host', HOST, '--port', String(PORT),
  ], { stdio: 'ignore' });
  setApiBase(BASE);
  await waitForServer();
  const info = await createSession(new Blob([DATA]), new Blob([CONFIG]));
  expect(info.alternatives).toBe(10);
  expect(info.criteria).toBe(8);
  sessionId = info.id;
});

afterAll(() => {
  server?.kill('SIGTERM');
});

describe('session data', () => {
  it('serves two-decimal WMSD points for the bus fleet', async () => {
    const wmsd = await getWmsd(sessionId);
    expect(wmsd.mean_weight).toBeCloseTo(1.0, 12);
    const byId = new Map(wmsd.points.map((p) => [p.id, p]));
    expect(byId.get('b24')?.wm).toBeCloseTo(0.96, 12);
    expect(byId.get('b24')?.wsd).toBeCloseTo(0.06, 12);
    expect(byId.get('b15')?.wsd).toBeCloseTo(0.32, 12);
  });

  it('serves a boundary polyline from (0,0) to (m,0)', async () => {
    const b = await getBoundary(sessionId);
    const first = b.polyline[0];
    const last = b.polyline[b.polyline.length - 1];
    expect(first[0]).toBeCloseTo(0, 9);
    expect(first[1]).toBeCloseTo(0, 9);
    expect(last[0]).toBeCloseTo(b.mean_weight, 9);
    expect(last[1]).toBeCloseTo(0, 9);
  });

  it('reports the operational limits', async () => {
    const i = await getEpsilonLimit(sessionId, 'I');
    expect(i.unbounded).toBe(false);
    expect(i.limit).toBeCloseTo(Math.sqrt(7 / 15), 5);
    const r = await getEpsilonLimit(sessionId, 'R');
    expect(r.unbounded).toBe(true);
    expect(r.limit).toBeNull();
  });
});

describe('field checksums', () => {
  it('theta 0.5 renders the same field as the classic spec', async () => {
    for (const kind of ['R', 'I'] as const) {
      const viaTheta = await postField(sessionId, { family: 'elliptic', kind, theta: 0.5 }, [256, 256]);
      const viaClassic = await postField(sessionId, { family: 'classic', kind }, [256, 256]);
      const a = fieldChecksum(decodeField(viaTheta));
      const b = fieldChecksum(decodeField(viaClassic));
      expect(a).toBe(b);
    }
  });

  it('a different epsilon changes the checksum', async () => {
    const one = await postField(sessionId, { family: 'elliptic', kind: 'R', theta: 0.5 }, [128, 128]);
    const other = await postField(sessionId, { family: 'elliptic', kind: 'R', theta: 0.7 }, [128, 128]);
    expect(fieldChecksum(decodeField(one))).not.toBe(fieldChecksum(decodeField(other)));
  });
});

describe('ranking passthrough', () => {
  it('uses service positions as-is, already ordered', async () => {
    const ranked = await postRank(sessionId, { family: 'classic', kind: 'R' });
    expect(ranked.tuple_scores).toBe(false);
    expect(ranked.entries).toHaveLength(10);
    const positions = ranked.entries.map((e) => e.position);
    const sorted = [...positions].sort((x, y) => x - y);
    expect(positions).toEqual(sorted);
    expect(ranked.entries[0].id).toBe('b24');
    expect(ranked.entries[0].position).toBe(1);
  });

  it('handles lexicographic tuple scores', async () => {
    const ranked = await postRank(sessionId, { family: 'lex', lex: 'RL' });
    expect(ranked.tuple_scores).toBe(true);
    const b03 = ranked.entries.find((e) => e.id === 'b03');
    expect(Array.isArray(b03?.score)).toBe(true);
    expect((b03?.score as number[])[1]).toBeCloseTo(0, 12);
  });
});

describe('forced zone, client and server agree', () => {
  it('the client guard blocks what the server would reject', async () => {
    const limitInfo = await getEpsilonLimit(sessionId, 'I');
    const limit = limitInfo.limit;
    const spec = { family: 'elliptic', kind: 'I', epsilon: 0.5 } as const;
    expect(canSubmit(spec, limit, false)).toBe(false);
    expect(() => buildSubmitSpec(spec, limit, false)).toThrow();
    // bypassing the guard on purpose shows the server refuses too
    await expect(postRank(sessionId, spec)).rejects.toThrow(/EpsilonBelowLimit/);
  });

  it('a confirmed submission goes through forced, with a warning', async () => {
    const limitInfo = await getEpsilonLimit(sessionId, 'I');
    const outgoing = buildSubmitSpec(
      { family: 'elliptic', kind: 'I', epsilon: 0.5 }, limitInfo.limit, true);
    expect(outgoing.force).toBe(true);
    const ranked = await postRank(sessionId, outgoing);
    expect(ranked.entries).toHaveLength(10);
    expect(ranked.warning).toMatch(/operational limit/);
  });

  it('check-property reports the violation below the limit', async () => {
    const rep = await postCheckProperty(
      sessionId, { family: 'elliptic', kind: 'I', epsilon: 0.5, force: true }, 64);
    expect(rep.satisfied).toBe(false);
    expect(rep.minimum).toBeLessThan(0);
    expect(rep.argmin.length).toBeGreaterThan(0);
  });
});
