import {
  PropertyResponse,
  RankResponse,
  SpecMap,
  WmsdResponse,
  BoundaryResponse,
  apiBase,
  createSession,
  getBoundary,
  getEpsilonLimit,
  getWmsd,
  postCheckProperty,
  postField,
  postRank,
  setApiBase,
} from './api';
import { decodeField, fieldChecksum } from './field';
import { paintHeatmap } from './heatmap';
import {
  LEX_VARIANTS,
  WizardAnswers,
  buildSubmitSpec,
  canSubmit,
  describeSpec,
  epsilonToTheta,
  inForcedZone,
  specFromAnswers,
  thetaFloor,
  thetaToEpsilon,
} from './spec';
import { Store } from './store';

const FIELD_RESOLUTION: [number, number] = [256, 256];
const FIELD_DEBOUNCE_MS = 120;
const ISOLINE_LEVELS = [0.25, 0.5, 0.75];

interface ExplorerState {
  sessionId: string | null;
  meanWeight: number;
  wmsd: WmsdResponse | null;
  boundary: BoundaryResponse | null;
  answers: WizardAnswers;
  spec: SpecMap | null;
  theta: number;
  limit: number | null;
  forceConfirmed: boolean;
  highlighted: string[];
  lastProperty: PropertyResponse | null;
  compare: boolean;
  compareSpec: SpecMap | null;
  status: string;
}

const store = new Store<ExplorerState>({
  sessionId: null,
  meanWeight: 1,
  wmsd: null,
  boundary: null,
  answers: {},
  spec: null,
  theta: 0.5,
  limit: null,
  forceConfirmed: false,
  highlighted: [],
  lastProperty: null,
  compare: false,
  compareSpec: null,
  status: 'upload a dataset to begin',
});

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function debounce<A extends unknown[]>(fn: (...args: A) => void, ms: number) {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), ms);
  };
}

// One heatmap pane with its own in-flight request. Latest wins: a new
// fetch aborts the previous one.
class FieldPane {
  canvas: HTMLCanvasElement;
  caption: HTMLElement;
  private box: HTMLElement;
  private controller: AbortController | null = null;
  private lastField: ReturnType<typeof decodeField> | null = null;

  constructor(root: HTMLElement, title: string) {
    this.box = el('div', { class: 'pane' });
    this.box.appendChild(el('h3', {}, title));
    this.canvas = el('canvas', { width: '480', height: '320' });
    this.caption = el('div', { class: 'caption' }, 'no field yet');
    this.box.appendChild(this.canvas);
    this.box.appendChild(this.caption);
    root.appendChild(this.box);
  }

  setVisible(on: boolean) {
    this.box.style.display = on ? '' : 'none';
  }

  repaint() {
    const s = store.get();
    paintHeatmap(this.canvas, this.lastField, {
      boundary: s.boundary ?? undefined,
      points: s.wmsd?.points,
      highlighted: new Set(s.highlighted),
      isolineLevels: this.lastField ? ISOLINE_LEVELS : undefined,
    });
  }

  clear(note: string) {
    this.controller?.abort();
    this.controller = null;
    this.lastField = null;
    this.repaint();
    this.caption.textContent = note;
  }

  async refresh(spec: SpecMap) {
    const s = store.get();
    if (!s.sessionId) return;
    if (spec.family === 'lex') {
      this.clear('lexicographic specs rank tuples; no scalar field to draw');
      return;
    }
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    try {
      const payload = await postField(s.sessionId, spec, FIELD_RESOLUTION, controller.signal);
      if (controller.signal.aborted) return;
      const field = decodeField(payload);
      this.lastField = field;
      this.repaint();
      this.caption.textContent = `${describeSpec(spec)}  checksum ${fieldChecksum(field)}`;
    } catch (err) {
      if ((err as Error).name === 'AbortError') return;
      this.caption.textContent = `field failed: ${(err as Error).message}`;
    }
  }
}

// Spec actually sent for the main pane: the slider position overrides
// the preseeded epsilon for elliptic specs.
function effectiveSpec(): SpecMap | null {
  const s = store.get();
  if (!s.spec) return null;
  if (s.spec.family === 'elliptic') {
    return { ...s.spec, epsilon: undefined, theta: s.theta };
  }
  return s.spec;
}

async function applySpec(pane: FieldPane, table: HTMLElement) {
  const s = store.get();
  const spec = effectiveSpec();
  if (!s.sessionId || !spec) return;
  if (!canSubmit(spec, s.limit, s.forceConfirmed)) {
    store.set({ status: 'epsilon at or below the limit: tick the confirmation first' });
    return;
  }
  const outgoing = buildSubmitSpec(spec, s.limit, s.forceConfirmed);
  try {
    const ranked = await postRank(s.sessionId, outgoing);
    renderRanking(table, ranked);
    store.set({ status: ranked.warning ? `ranked with warning: ${ranked.warning}` : 'ranked' });
    pane.refresh(outgoing);
  } catch (err) {
    store.set({ status: `rank failed: ${(err as Error).message}` });
  }
}

function renderRanking(table: HTMLElement, ranked: RankResponse) {
  table.innerHTML = '';
  const head = el('tr');
  for (const h of ['pos', 'id', 'score', 'WM', 'WSD']) head.appendChild(el('th', {}, h));
  table.appendChild(head);
  // rows in service order; positions come straight from the response
  for (const e of ranked.entries) {
    const tr = el('tr', { 'data-id': e.id });
    const score = Array.isArray(e.score)
      ? '(' + e.score.map((x) => x.toFixed(4)).join(', ') + ')'
      : e.score.toFixed(4);
    tr.appendChild(el('td', {}, `(${e.position})`));
    tr.appendChild(el('td', {}, e.id));
    tr.appendChild(el('td', {}, score));
    tr.appendChild(el('td', {}, e.wm.toFixed(2)));
    tr.appendChild(el('td', {}, e.wsd.toFixed(2)));
    if (store.get().highlighted.includes(e.id)) tr.classList.add('hot');
    tr.addEventListener('click', () => {
      const cur = new Set(store.get().highlighted);
      if (cur.has(e.id)) cur.delete(e.id);
      else cur.add(e.id);
      store.set({ highlighted: [...cur] });
    });
    table.appendChild(tr);
  }
}

function renderWizard(root: HTMLElement, onConfirm: (spec: SpecMap) => void) {
  const sync = () => {
    const a = store.get().answers;
    root.innerHTML = '';
    root.appendChild(el('h3', {}, 'choose an aggregation'));

    const q1 = el('div', { class: 'question' });
    q1.appendChild(el('p', {}, 'Should dispersion influence the ranking?'));
    for (const [value, label] of [
      ['none', 'no, mean only'],
      ['sporadic', 'only to break ties'],
      ['continuous', 'yes, continuously'],
    ] as const) {
      const lab = el('label');
      const input = el('input', { type: 'radio', name: 'influence', value });
      (input as HTMLInputElement).checked = a.influence === value;
      input.addEventListener('change', () =>
        store.set({ answers: { influence: value } }));
      lab.appendChild(input);
      lab.appendChild(document.createTextNode(' ' + label));
      q1.appendChild(lab);
    }
    root.appendChild(q1);

    if (a.influence === 'sporadic') {
      const q = el('div', { class: 'question' });
      q.appendChild(el('p', {}, 'Which lexicographic variant?'));
      const sel = el('select') as HTMLSelectElement;
      sel.appendChild(el('option', { value: '' }, 'pick one'));
      for (const v of LEX_VARIANTS) sel.appendChild(el('option', { value: v }, v));
      sel.value = a.lex ?? '';
      sel.addEventListener('change', () =>
        store.set({ answers: { ...a, lex: (sel.value || undefined) as WizardAnswers['lex'] } }));
      q.appendChild(sel);
      root.appendChild(q);
    }

    if (a.influence === 'continuous') {
      const q2 = el('div', { class: 'question' });
      q2.appendChild(el('p', {}, 'Compared to the classic scores, its influence should be:'));
      for (const [value, label] of [
        ['unchanged', 'kept as is'],
        ['decreased', 'decreased (eps > 1)'],
        ['increased', 'increased (eps < 1)'],
      ] as const) {
        const lab = el('label');
        const input = el('input', { type: 'radio', name: 'trend', value });
        (input as HTMLInputElement).checked = a.trend === value;
        input.addEventListener('change', () =>
          store.set({ answers: { ...a, trend: value } }));
        lab.appendChild(input);
        lab.appendChild(document.createTextNode(' ' + label));
        q2.appendChild(lab);
      }
      root.appendChild(q2);

      const q3 = el('div', { class: 'question' });
      q3.appendChild(el('p', {}, 'Reference kind:'));
      for (const value of ['I', 'A', 'R'] as const) {
        const lab = el('label');
        const input = el('input', { type: 'radio', name: 'kind', value });
        (input as HTMLInputElement).checked = a.kind === value;
        input.addEventListener('change', () =>
          store.set({ answers: { ...a, kind: value } }));
        lab.appendChild(input);
        lab.appendChild(document.createTextNode(' ' + value));
        q3.appendChild(lab);
      }
      root.appendChild(q3);
    }

    const spec = specFromAnswers(a);
    const confirm = el('button', {}, 'use this aggregation') as HTMLButtonElement;
    confirm.disabled = spec === null || !store.get().sessionId;
    confirm.addEventListener('click', () => {
      if (spec) onConfirm(spec);
    });
    root.appendChild(confirm);
  };
  store.subscribe(sync);
  sync();
}

function renderSlider(root: HTMLElement, onInput: () => void, onRelease: () => void) {
  const sync = () => {
    const s = store.get();
    root.innerHTML = '';
    const spec = s.spec;
    const sliderable = spec !== null && (spec.family === 'elliptic' || spec.family === 'classic');
    root.appendChild(el('h3', {}, 'epsilon'));
    if (!sliderable) {
      root.appendChild(el('p', { class: 'caption' },
        spec === null ? 'confirm an aggregation first'
          : 'the slider applies to classic and elliptic specs only'));
      return;
    }

    const floor = thetaFloor(s.limit);
    const wrap = el('div', { class: 'sliderwrap' });
    if (floor > 0) {
      const zone = el('div', { class: 'forcedzone' });
      zone.style.width = `${(floor * 100).toFixed(2)}%`;
      zone.title = 'forced zone: the extremum-location property fails here';
      wrap.appendChild(zone);
      const marker = el('div', { class: 'limitmark' });
      marker.style.left = `${(floor * 100).toFixed(2)}%`;
      marker.title = `operational limit E = ${s.limit?.toFixed(4)}`;
      wrap.appendChild(marker);
    }
    const slider = el('input', {
      type: 'range', min: '0.01', max: '0.99', step: '0.005',
      value: String(s.theta),
    }) as HTMLInputElement;
    slider.addEventListener('input', () => {
      const theta = Number(slider.value);
      const base = store.get();
      const next: Partial<ExplorerState> = { theta };
      if (base.spec && base.spec.family === 'classic') {
        next.spec = { family: 'elliptic', kind: base.spec.kind };
      }
      if (!inForcedZone({ family: 'elliptic', kind: base.spec?.kind, theta }, base.limit)) {
        next.forceConfirmed = false;
      }
      store.set(next);
      onInput();
    });
    slider.addEventListener('change', onRelease);
    wrap.appendChild(slider);
    root.appendChild(wrap);

    const eps = thetaToEpsilon(s.theta);
    const line = el('div', { class: 'caption' },
      `theta ${s.theta.toFixed(3)}  ->  eps ${isFinite(eps) ? eps.toFixed(4) : 'inf'}`
      + (s.limit !== null && isFinite(s.limit) ? `   limit E ${s.limit.toFixed(4)}` : '   no limit for this kind'));
    root.appendChild(line);

    const probe = effectiveSpec();
    if (probe && inForcedZone(probe, s.limit)) {
      const lab = el('label', { class: 'forcedconfirm' });
      const box = el('input', { type: 'checkbox' }) as HTMLInputElement;
      box.checked = s.forceConfirmed;
      box.addEventListener('change', () => store.set({ forceConfirmed: box.checked }));
      lab.appendChild(box);
      lab.appendChild(document.createTextNode(
        ' I understand the extremum-location property fails below E; rank anyway'));
      root.appendChild(lab);
    }
  };
  store.subscribe(sync);
  sync();
}

function renderProperty(root: HTMLElement) {
  const sync = () => {
    const s = store.get();
    root.innerHTML = '';
    root.appendChild(el('h3', {}, 'property probe'));
    const btn = el('button', {}, 'probe current spec') as HTMLButtonElement;
    const probe = effectiveSpec();
    btn.disabled = !s.sessionId || !probe || probe.family !== 'elliptic';
    btn.addEventListener('click', async () => {
      const spec = effectiveSpec();
      if (!s.sessionId || !spec) return;
      try {
        const rep = await postCheckProperty(s.sessionId, { ...spec, force: true });
        store.set({ lastProperty: rep });
      } catch (err) {
        store.set({ status: `probe failed: ${(err as Error).message}` });
      }
    });
    root.appendChild(btn);
    if (s.lastProperty) {
      const rep = s.lastProperty;
      const fmt = (pts: [number, number][]) =>
        pts.slice(0, 3).map(([a, b]) => `(${a.toFixed(2)}, ${b.toFixed(2)})`).join(' ');
      root.appendChild(el('p', { class: 'caption' },
        (rep.satisfied ? 'extremes sit at the reference points' : 'PROPERTY VIOLATED')
        + ` | min ${rep.minimum.toFixed(4)} at ${fmt(rep.argmin)}`
        + ` | max ${rep.maximum.toFixed(4)} at ${fmt(rep.argmax)}`));
    }
  };
  store.subscribe(sync);
  sync();
}

async function startSession(dataFile: File, configFile: File) {
  store.set({ status: 'uploading...' });
  const info = await createSession(dataFile, configFile);
  const [wmsd, boundary] = await Promise.all([getWmsd(info.id), getBoundary(info.id)]);
  store.set({
    sessionId: info.id,
    meanWeight: wmsd.mean_weight,
    wmsd,
    boundary,
    spec: null,
    answers: {},
    highlighted: [],
    lastProperty: null,
    status: `session ${info.id.slice(0, 8)}: ${info.alternatives} alternatives, ${info.criteria} criteria`,
  });
}

async function refreshLimit() {
  const s = store.get();
  const spec = s.spec;
  if (!s.sessionId || !spec || (spec.family !== 'elliptic' && spec.family !== 'classic')) {
    store.set({ limit: null });
    return;
  }
  const kind = spec.kind ?? 'R';
  const res = await getEpsilonLimit(s.sessionId, kind);
  store.set({ limit: res.unbounded ? null : res.limit });
}

function main() {
  const app = document.getElementById('app');
  if (!app) return;

  const topbar = el('div', { class: 'topbar' });
  const apiInput = el('input', { type: 'text', value: apiBase(), size: '28' }) as HTMLInputElement;
  apiInput.addEventListener('change', () => setApiBase(apiInput.value));
  topbar.appendChild(el('span', {}, 'API '));
  topbar.appendChild(apiInput);
  const dataInput = el('input', { type: 'file', accept: '.csv' }) as HTMLInputElement;
  const configInput = el('input', { type: 'file', accept: '.yaml,.yml' }) as HTMLInputElement;
  const uploadBtn = el('button', {}, 'open session') as HTMLButtonElement;
  uploadBtn.addEventListener('click', async () => {
    const d = dataInput.files?.[0];
    const c = configInput.files?.[0];
    if (!d || !c) {
      store.set({ status: 'pick both a CSV and a YAML config' });
      return;
    }
    try {
      await startSession(d, c);
    } catch (err) {
      store.set({ status: `upload failed: ${(err as Error).message}` });
    }
  });
  topbar.appendChild(el('span', {}, ' data '));
  topbar.appendChild(dataInput);
  topbar.appendChild(el('span', {}, ' config '));
  topbar.appendChild(configInput);
  topbar.appendChild(uploadBtn);
  app.appendChild(topbar);

  const status = el('div', { class: 'status' });
  store.subscribe((s) => { status.textContent = s.status; });
  app.appendChild(status);

  const columns = el('div', { class: 'columns' });
  const left = el('div', { class: 'col side' });
  const mid = el('div', { class: 'col wide' });
  const right = el('div', { class: 'col side' });
  columns.appendChild(left);
  columns.appendChild(mid);
  columns.appendChild(right);
  app.appendChild(columns);

  const wizardBox = el('div', { class: 'box' });
  const sliderBox = el('div', { class: 'box' });
  const propertyBox = el('div', { class: 'box' });
  left.appendChild(wizardBox);
  left.appendChild(sliderBox);
  left.appendChild(propertyBox);

  const mainPane = new FieldPane(mid, 'score field');
  const compareWrap = el('div');
  mid.appendChild(compareWrap);
  const comparePane = new FieldPane(compareWrap, 'compare pane');
  comparePane.setVisible(false);

  const compareBtn = el('button', {}, 'pin current spec for comparison') as HTMLButtonElement;
  compareBtn.addEventListener('click', () => {
    const spec = effectiveSpec();
    const s = store.get();
    if (!spec || !canSubmit(spec, s.limit, s.forceConfirmed)) return;
    const pinned = buildSubmitSpec(spec, s.limit, s.forceConfirmed);
    store.set({ compare: true, compareSpec: pinned });
    comparePane.setVisible(true);
    comparePane.refresh(pinned);
  });
  mid.appendChild(compareBtn);

  const table = el('table', { class: 'ranking' });
  right.appendChild(el('h3', {}, 'ranking'));
  right.appendChild(table);

  const debouncedField = debounce(() => {
    const s = store.get();
    const spec = effectiveSpec();
    if (!spec || !canSubmit(spec, s.limit, s.forceConfirmed)) return;
    mainPane.refresh(buildSubmitSpec(spec, s.limit, s.forceConfirmed));
  }, FIELD_DEBOUNCE_MS);

  renderWizard(wizardBox, async (spec) => {
    const theta = spec.family === 'elliptic' && spec.epsilon !== undefined
      ? epsilonToTheta(spec.epsilon)
      : 0.5;
    store.set({ spec, theta, forceConfirmed: false, lastProperty: null });
    await refreshLimit();
    applySpec(mainPane, table);
  });
  renderSlider(sliderBox, debouncedField, () => applySpec(mainPane, table));
  renderProperty(propertyBox);

  let lastHighlight = store.get().highlighted;
  store.subscribe((s) => {
    if (s.highlighted !== lastHighlight) {
      lastHighlight = s.highlighted;
      mainPane.repaint();
      comparePane.repaint();
    }
  });
}

main();
