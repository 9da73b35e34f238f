"""Decimal rounding helpers.

Reports and the two-decimal reproduction mode round half away from zero
on the shortest decimal representation of the float. Plain round() uses
banker's rounding and would turn 0.945 into 0.94.
"""

from decimal import Decimal, ROUND_HALF_UP

import numpy as np


def round_half_away(x: float, ndigits: int) -> float:
    """Round to ndigits decimals, ties away from zero.

    Operates on str(x), i.e. the shortest decimal that round-trips to x,
    so displayed halves like 0.945 round the way they read.
    """
    q = Decimal(1).scaleb(-ndigits)
    return float(Decimal(str(float(x))).quantize(q, rounding=ROUND_HALF_UP))


def round_array_half_away(a, ndigits: int):
    a = np.asarray(a, dtype=float)
    out = np.empty_like(a)
    flat = out.reshape(-1)
    for i, x in enumerate(a.reshape(-1)):
        flat[i] = round_half_away(float(x), ndigits)
    return out
