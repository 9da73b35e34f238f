let API_BASE = 'http://127.0.0.1:8000';

export function setApiBase(base: string) {
  API_BASE = base.replace(/\/+$/, '');
}

export function apiBase(): string {
  return API_BASE;
}

export interface SpecMap {
  family: 'classic' | 'elliptic' | 'M' | 'lex';
  kind?: 'I' | 'A' | 'R';
  epsilon?: number;
  theta?: number;
  lex?: string;
  p?: number;
  force?: boolean;
}

export interface SessionInfo {
  id: string;
  alternatives: number;
  criteria: number;
}

export interface WmsdPointDto {
  id: string;
  wm: number;
  wsd: number;
}

export interface WmsdResponse {
  mean_weight: number;
  points: WmsdPointDto[];
}

export interface BoundaryResponse {
  mean_weight: number;
  polyline: [number, number][];
  vertices: [number, number][];
}

export interface EpsilonLimitResponse {
  kind: string;
  limit: number | null;
  unbounded: boolean;
}

export interface RankEntryDto {
  id: string;
  score: number | number[];
  position: number;
  wm: number;
  wsd: number;
}

export interface RankResponse {
  entries: RankEntryDto[];
  tuple_scores: boolean;
  warning?: string;
}

export interface FieldResponse {
  window: number[];
  resolution: number[];
  order: string;
  dtype?: string;
  values_b64?: string;
  mask_b64?: string;
  values?: (number | null)[][];
  mask?: number[][];
}

export interface PropertyResponse {
  satisfied: boolean;
  minimum: number;
  maximum: number;
  argmin: [number, number][];
  argmax: [number, number][];
  resolution: number;
}

async function checkOk(r: Response): Promise<Response> {
  if (!r.ok) {
    let detail = `${r.status}`;
    try {
      const body = await r.json();
      if (body && body.detail) detail = `${body.error ?? r.status}: ${body.detail}`;
    } catch {
      // non-JSON error body, keep the status code
    }
    throw new Error(detail);
  }
  return r;
}

export async function createSession(data: Blob, config: Blob): Promise<SessionInfo> {
  const form = new FormData();
  form.append('data', data, 'data.csv');
  form.append('config', config, 'config.yaml');
  const r = await fetch(`${API_BASE}/api/session`, { method: 'POST', body: form });
  return (await checkOk(r)).json();
}

export async function getWmsd(sessionId: string): Promise<WmsdResponse> {
  const r = await fetch(`${API_BASE}/api/session/${sessionId}/wmsd`);
  return (await checkOk(r)).json();
}

export async function getBoundary(sessionId: string): Promise<BoundaryResponse> {
  const r = await fetch(`${API_BASE}/api/session/${sessionId}/boundary`);
  return (await checkOk(r)).json();
}

export async function getEpsilonLimit(sessionId: string, kind: string): Promise<EpsilonLimitResponse> {
  const r = await fetch(`${API_BASE}/api/session/${sessionId}/epsilon-limit?kind=${kind}`);
  return (await checkOk(r)).json();
}

export async function postRank(sessionId: string, spec: SpecMap, tolerance?: number): Promise<RankResponse> {
  const body: Record<string, unknown> = { spec };
  if (tolerance !== undefined) body.tolerance = tolerance;
  const r = await fetch(`${API_BASE}/api/session/${sessionId}/rank`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(body),
  });
  return (await checkOk(r)).json();
}

export async function postField(
  sessionId: string,
  spec: SpecMap,
  resolution: [number, number],
  signal?: AbortSignal,
): Promise<FieldResponse> {
  const r = await fetch(`${API_BASE}/api/session/${sessionId}/field`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify({ spec, resolution, encoding: 'b64' }),
    signal,
  });
  return (await checkOk(r)).json();
}

export async function postCheckProperty(
  sessionId: string,
  spec: SpecMap,
  resolution = 256,
): Promise<PropertyResponse> {
  const r = await fetch(`${API_BASE}/api/session/${sessionId}/check-property`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify({ spec, resolution }),
  });
  return (await checkOk(r)).json();
}
