"""Descending ranking with dense positions.

Scores are either all scalars or all tuples (lexicographic). Equal
scores share a position; positions are dense (1, 2, 2, 3). Sorting is
stable: alternatives with tied scores keep their input order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import DomainViolation, MixedScoreKinds
from .lexicographic import EQUAL, lex_compare

Score = Union[float, tuple]


@dataclass(frozen=True)
class RankedEntry:
    id: str
    score: Score
    position: int


def _is_tuple_score(score) -> bool:
    return isinstance(score, (tuple, list))


def _compare(a: Score, b: Score, tolerance: float) -> int:
    if _is_tuple_score(a):
        return lex_compare(a, b, tolerance)
    if abs(a - b) <= tolerance:
        return EQUAL
    return 1 if a > b else -1


def rank(scores: Iterable[tuple[str, Score]],
         tolerance: float = 0.0) -> list[RankedEntry]:
    """Rank (id, score) pairs by descending score.

    tolerance widens indifference: adjacent scores within it share a
    position (chained, so long runs of near-ties collapse into one
    class). Tuple scores compare lexicographically with the same
    per-component tolerance. Mixing scalar and tuple scores raises.
    """
    items = list(scores)
    if tolerance < 0:
        raise DomainViolation("tolerance must be non-negative")
    if not items:
        return []
    tupleness = {_is_tuple_score(s) for _, s in items}
    if len(tupleness) > 1:
        raise MixedScoreKinds(
            "scores must be all scalars or all tuples")
    (is_tuple,) = tupleness
    if is_tuple:
        lengths = {len(s) for _, s in items}
        if len(lengths) > 1:
            raise MixedScoreKinds(
                f"tuple scores of differing lengths {sorted(lengths)}")

    indexed = list(enumerate(items))

    def key_cmp(x, y):
        c = _compare(x[1][1], y[1][1], 0.0)
        if c != 0:
            return -c        # descending
        return x[0] - y[0]   # stable: earlier input first

    indexed.sort(key=functools.cmp_to_key(key_cmp))

    out: list[RankedEntry] = []
    position = 0
    prev: Score | None = None
    for _, (ident, score) in indexed:
        if prev is None or _compare(score, prev, tolerance) != EQUAL:
            position += 1
        out.append(RankedEntry(id=ident, score=_freeze(score),
                               position=position))
        prev = score
    return out


def _freeze(score: Score) -> Score:
    if isinstance(score, list):
        return tuple(score)
    return score
