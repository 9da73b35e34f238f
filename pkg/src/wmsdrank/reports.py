"""Ranking report emission: plain text table, CSV, or JSON lines.

One row per alternative: id, WM, WSD, score, dense position. Scalar
scores show 3 decimals (half away from zero); tuple scores show their
components with explicit signs after the first, e.g. (0.95, -0.09).
"""

from __future__ import annotations

import csv
import io
import json

from .errors import DomainViolation, LengthMismatch
from .model import WmsdPoint
from .ranking import RankedEntry
from .rounding import round_half_away

FORMATS = ("table-text", "csv", "json-lines")


def _fmt_scalar(score: float) -> str:
    return f"{round_half_away(score, 3):.3f}"


def _fmt_tuple(score: tuple) -> str:
    parts = [f"{round_half_away(score[0], 2):.2f}"]
    for comp in score[1:]:
        r = round_half_away(comp, 2)
        parts.append("0.00" if r == 0 else f"{r:+.2f}")
    return "(" + ", ".join(parts) + ")"


def _fmt_score(score) -> str:
    if isinstance(score, tuple):
        return _fmt_tuple(score)
    return _fmt_scalar(score)


def emit_ranking_report(ranked: list[RankedEntry],
                        wmsd: list[WmsdPoint],
                        format: str = "table-text") -> str:
    """Render a ranked list alongside its WMSD coordinates.

    wmsd must align with ranked entry order.
    """
    if format not in FORMATS:
        raise DomainViolation(
            f"format must be one of {FORMATS}, got {format!r}")
    if len(ranked) != len(wmsd):
        raise LengthMismatch(
            f"{len(ranked)} entries against {len(wmsd)} points")

    if format == "json-lines":
        lines = []
        for e, p in zip(ranked, wmsd):
            score = list(e.score) if isinstance(e.score, tuple) else e.score
            lines.append(json.dumps(
                {"id": e.id, "wm": p.wm, "wsd": p.wsd,
                 "score": score, "position": e.position},
                separators=(", ", ": ")))
        return "\n".join(lines) + "\n"

    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "wm", "wsd", "score", "position"])
        for e, p in zip(ranked, wmsd):
            writer.writerow([e.id, f"{p.wm:.6g}", f"{p.wsd:.6g}",
                             _fmt_score(e.score), e.position])
        return buf.getvalue()

    rows = [["id", "WM", "WSD", "score", "position"]]
    for e, p in zip(ranked, wmsd):
        rows.append([e.id, f"{p.wm:.4f}", f"{p.wsd:.4f}",
                     _fmt_score(e.score), f"({e.position})"])
    widths = [max(len(r[c]) for r in rows) for c in range(5)]
    lines = []
    for r in rows:
        lines.append("  ".join(cell.ljust(widths[c])
                               for c, cell in enumerate(r)).rstrip())
    return "\n".join(lines) + "\n"
