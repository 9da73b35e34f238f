import type { SpecMap } from './api';

// Wizard: three questions decide the aggregation family.
//   1. Should dispersion (WSD) influence the ranking at all?
//      none / sporadic (tie-breaks only) / continuous
//   2. (continuous) keep, shrink or grow its influence vs the classic scores?
//   3. (continuous) which reference kind: I, A or R?
//   (sporadic) which lexicographic variant?

export type Influence = 'none' | 'sporadic' | 'continuous';
export type Trend = 'unchanged' | 'decreased' | 'increased';
export type Kind = 'I' | 'A' | 'R';

export const LEX_VARIANTS = ['IL', 'AL', 'RL', 'RLpm', 'XLpm', 'RL3'] as const;
export type LexVariant = (typeof LEX_VARIANTS)[number];

export interface WizardAnswers {
  influence?: Influence;
  trend?: Trend;
  kind?: Kind;
  lex?: LexVariant;
}

export const PRESEED_DECREASED = 2.0;
export const PRESEED_INCREASED = 0.8;

// Null while the path is incomplete; the wizard's confirm button stays
// disabled until this returns a spec.
export function specFromAnswers(a: WizardAnswers): SpecMap | null {
  switch (a.influence) {
    case 'none':
      return { family: 'M' };
    case 'sporadic':
      if (!a.lex) return null;
      return { family: 'lex', lex: a.lex };
    case 'continuous': {
      if (!a.kind || !a.trend) return null;
      if (a.trend === 'unchanged') return { family: 'classic', kind: a.kind };
      const epsilon = a.trend === 'decreased' ? PRESEED_DECREASED : PRESEED_INCREASED;
      return { family: 'elliptic', kind: a.kind, epsilon };
    }
    default:
      return null;
  }
}

// Slider runs in theta so the control is bounded: eps = theta/(1-theta),
// theta 0.5 is the classic circle, theta -> 1 tends to the plain mean M.

export function thetaToEpsilon(theta: number): number {
  if (!(theta > 0 && theta <= 1)) throw new Error(`theta out of (0, 1]: ${theta}`);
  if (theta === 1) return Infinity;
  return theta / (1 - theta);
}

export function epsilonToTheta(epsilon: number): number {
  if (!(epsilon > 0)) throw new Error(`epsilon must be positive: ${epsilon}`);
  if (!isFinite(epsilon)) return 1;
  return epsilon / (1 + epsilon);
}

// Theta position of the operational limit E; the slider is safe only
// strictly above it. An unbounded limit (R, or M) has no forced zone.
export function thetaFloor(limit: number | null): number {
  if (limit === null || !isFinite(limit)) return 0;
  return epsilonToTheta(limit);
}

export function inForcedZone(spec: SpecMap, limit: number | null): boolean {
  if (spec.family !== 'elliptic') return false;
  if (limit === null || !isFinite(limit)) return false;
  const eps = spec.theta !== undefined ? thetaToEpsilon(spec.theta) : spec.epsilon;
  if (eps === undefined || !isFinite(eps)) return false;
  return eps <= limit;
}

// The one hard client-side rule: an unconfirmed spec at or below the
// limit must never reach the service.
export function canSubmit(spec: SpecMap, limit: number | null, confirmed: boolean): boolean {
  if (!inForcedZone(spec, limit)) return true;
  return confirmed;
}

export function buildSubmitSpec(spec: SpecMap, limit: number | null, confirmed: boolean): SpecMap {
  if (!canSubmit(spec, limit, confirmed)) {
    throw new Error('epsilon at or below the operational limit needs explicit confirmation');
  }
  if (inForcedZone(spec, limit) && confirmed) {
    return { ...spec, force: true };
  }
  return spec;
}

export function describeSpec(spec: SpecMap): string {
  switch (spec.family) {
    case 'M':
      return 'M (weighted mean)';
    case 'lex':
      return `${spec.lex} (lexicographic)`;
    case 'classic':
      return `${spec.kind} (classic)`;
    case 'elliptic': {
      const eps = spec.theta !== undefined ? thetaToEpsilon(spec.theta) : (spec.epsilon ?? 1);
      const shown = isFinite(eps) ? eps.toFixed(3) : 'inf';
      return `${spec.kind} (elliptic, eps=${shown})`;
    }
  }
}
