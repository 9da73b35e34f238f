import { describe, expect, it } from 'vitest';

import {
  PRESEED_DECREASED,
  PRESEED_INCREASED,
  buildSubmitSpec,
  canSubmit,
  epsilonToTheta,
  inForcedZone,
  specFromAnswers,
  thetaFloor,
  thetaToEpsilon,
} from '../src/spec';

describe('wizard mapping', () => {
  it('no influence maps to the plain mean', () => {
    expect(specFromAnswers({ influence: 'none' })).toEqual({ family: 'M' });
  });

  it('sporadic influence maps to the lexicographic family', () => {
    expect(specFromAnswers({ influence: 'sporadic', lex: 'RL' }))
      .toEqual({ family: 'lex', lex: 'RL' });
    expect(specFromAnswers({ influence: 'sporadic', lex: 'XLpm' }))
      .toEqual({ family: 'lex', lex: 'XLpm' });
  });

  it('continuous and unchanged maps to the classic kinds', () => {
    for (const kind of ['I', 'A', 'R'] as const) {
      expect(specFromAnswers({ influence: 'continuous', trend: 'unchanged', kind }))
        .toEqual({ family: 'classic', kind });
    }
  });

  it('decreased influence preseeds an elliptic slider above 1', () => {
    const spec = specFromAnswers({ influence: 'continuous', trend: 'decreased', kind: 'R' });
    expect(spec).toEqual({ family: 'elliptic', kind: 'R', epsilon: PRESEED_DECREASED });
    expect(PRESEED_DECREASED).toBeGreaterThan(1);
  });

  it('increased influence preseeds an elliptic slider below 1', () => {
    const spec = specFromAnswers({ influence: 'continuous', trend: 'increased', kind: 'I' });
    expect(spec).toEqual({ family: 'elliptic', kind: 'I', epsilon: PRESEED_INCREASED });
    expect(PRESEED_INCREASED).toBeLessThan(1);
  });

  it('incomplete paths yield no spec, blocking confirmation', () => {
    expect(specFromAnswers({})).toBeNull();
    expect(specFromAnswers({ influence: 'sporadic' })).toBeNull();
    expect(specFromAnswers({ influence: 'continuous' })).toBeNull();
    expect(specFromAnswers({ influence: 'continuous', trend: 'decreased' })).toBeNull();
    expect(specFromAnswers({ influence: 'continuous', kind: 'R' })).toBeNull();
  });
});

describe('theta slider', () => {
  it('maps theta to epsilon with 0.5 at the classic circle', () => {
    expect(thetaToEpsilon(0.5)).toBe(1);
    expect(thetaToEpsilon(2 / 3)).toBeCloseTo(2, 12);
    expect(thetaToEpsilon(0.4)).toBeCloseTo(2 / 3, 12);
    expect(thetaToEpsilon(1)).toBe(Infinity);
  });

  it('round-trips with epsilonToTheta', () => {
    for (const eps of [0.1, 0.8, 1, 2.5, 40]) {
      expect(thetaToEpsilon(epsilonToTheta(eps))).toBeCloseTo(eps, 10);
    }
    expect(epsilonToTheta(Infinity)).toBe(1);
  });

  it('rejects positions outside the control range', () => {
    expect(() => thetaToEpsilon(0)).toThrow();
    expect(() => thetaToEpsilon(1.2)).toThrow();
    expect(() => epsilonToTheta(0)).toThrow();
  });

  it('places the limit marker at E/(1+E)', () => {
    expect(thetaFloor(2 / 3)).toBeCloseTo(0.4, 12);
    expect(thetaFloor(null)).toBe(0);
    expect(thetaFloor(Infinity)).toBe(0);
  });
});

describe('forced zone guard', () => {
  const E = 0.683;

  it('flags elliptic specs at or below the limit', () => {
    expect(inForcedZone({ family: 'elliptic', kind: 'I', epsilon: 0.5 }, E)).toBe(true);
    expect(inForcedZone({ family: 'elliptic', kind: 'I', epsilon: E }, E)).toBe(true);
    expect(inForcedZone({ family: 'elliptic', kind: 'I', epsilon: 0.7 }, E)).toBe(false);
    expect(inForcedZone({ family: 'elliptic', kind: 'I', theta: 0.3 }, E)).toBe(true);
    expect(inForcedZone({ family: 'classic', kind: 'I' }, E)).toBe(false);
    expect(inForcedZone({ family: 'elliptic', kind: 'R', epsilon: 0.1 }, null)).toBe(false);
  });

  it('cannot build a submission at or below E without confirmation', () => {
    const spec = { family: 'elliptic', kind: 'I', epsilon: 0.5 } as const;
    expect(canSubmit(spec, E, false)).toBe(false);
    expect(() => buildSubmitSpec(spec, E, false)).toThrow();
    const onLimit = { family: 'elliptic', kind: 'A', epsilon: E } as const;
    expect(canSubmit(onLimit, E, false)).toBe(false);
    expect(() => buildSubmitSpec(onLimit, E, false)).toThrow();
  });

  it('confirmation forces the spec explicitly', () => {
    const spec = { family: 'elliptic', kind: 'I', epsilon: 0.5 } as const;
    expect(canSubmit(spec, E, true)).toBe(true);
    expect(buildSubmitSpec(spec, E, true)).toEqual({ ...spec, force: true });
  });

  it('safe specs pass through untouched', () => {
    const safe = { family: 'elliptic', kind: 'I', epsilon: 0.9 } as const;
    expect(buildSubmitSpec(safe, E, false)).toEqual(safe);
    const classic = { family: 'classic', kind: 'R' } as const;
    expect(buildSubmitSpec(classic, E, false)).toEqual(classic);
    const unbounded = { family: 'elliptic', kind: 'R', epsilon: 0.05 } as const;
    expect(buildSubmitSpec(unbounded, null, false)).toEqual(unbounded);
  });
});
