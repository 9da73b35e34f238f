"""Dataset CSV parsing and emission.

Dialect: comma separator, dot decimal point, first column holds the
alternative id, header row required. Header criterion names must match
the config's criteria in order.
"""

from __future__ import annotations

import csv
import io

from .config import ProjectConfig
from .errors import HeaderMismatch, ParseError
from .model import DecisionMatrix


def parse_dataset(text: str, config: ProjectConfig) -> DecisionMatrix:
    """Parse CSV text into a DecisionMatrix validated against config."""
    try:
        rows = list(csv.reader(io.StringIO(text)))
    except csv.Error as exc:
        raise ParseError(f"invalid CSV: {exc}") from exc
    rows = [r for r in rows if r and any(cell.strip() for cell in r)]
    if not rows:
        raise ParseError("empty input")
    header = [cell.strip() for cell in rows[0]]
    expected = [c.name for c in config.criteria]
    if len(header) < 2:
        raise HeaderMismatch(
            "header must have an id column plus one column per criterion",
            line=1)
    if header[1:] != expected:
        raise HeaderMismatch(
            f"criterion columns {header[1:]} do not match the "
            f"configured criteria {expected}", line=1)
    if len(rows) == 1:
        raise ParseError("no data rows after the header")

    ids: list[str] = []
    values: list[list[float]] = []
    for lineno, row in enumerate(rows[1:], start=2):
        cells = [cell.strip() for cell in row]
        if len(cells) != len(header):
            raise ParseError(
                f"expected {len(header)} fields, found {len(cells)}",
                line=lineno)
        ident = cells[0]
        if not ident:
            raise ParseError("empty alternative id", line=lineno, column=1)
        row_vals = []
        for col, cell in enumerate(cells[1:], start=2):
            try:
                row_vals.append(float(cell))
            except ValueError:
                raise ParseError(
                    f"non-numeric value {cell!r} for criterion "
                    f"{header[col - 1]!r}", line=lineno, column=col
                ) from None
        ids.append(ident)
        values.append(row_vals)
    return DecisionMatrix(ids=ids, values=values, criteria=config.criteria)


def emit_dataset_csv(dm: DecisionMatrix, id_header: str = "id") -> str:
    """CSV text that parses back to an identical matrix.

    Floats are written with repr, which round-trips exactly.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([id_header] + [c.name for c in dm.criteria])
    for i, ident in enumerate(dm.ids):
        writer.writerow([ident] + [repr(float(x)) for x in dm.values[i]])
    return buf.getvalue()
