"""Tables of exact coefficients in JSON, CSV or plain text."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import TextIO

from .appell import sigma
from .exact_arith import format_rational
from .family import AppellFamily
from .faulhaber import faulhaber_decompose
from .powersum import classical_faulhaber
from .umbral import alpha_rs

__all__ = ["TABLES", "FORMATS", "build_table", "emit_table", "render_table"]

TABLES = ("fp", "fh", "sigma", "alpha", "alpha-rs", "ff")
FORMATS = ("json", "csv", "text")

Row = tuple[str, list[Fraction]]


def build_table(what: str, family: AppellFamily, n_min: int, n_max: int) -> list[Row]:
    """Rows of (label, values) for n_min <= n <= n_max.

    ``alpha`` is a single row of alpha_n; ``alpha-rs`` has one row per rank r
    with the shifts s in the same range; ``ff`` lists odd n only.
    """
    if n_min < 0 or n_max < n_min:
        raise ValueError(f"invalid range {n_min}..{n_max}")
    ns = range(n_min, n_max + 1)
    if what == "fp":
        return [(str(n), list(faulhaber_decompose(family, n).fp)) for n in ns]
    if what == "fh":
        return [(str(n), list(faulhaber_decompose(family, n).fh)) for n in ns]
    if what == "sigma":
        return [(str(n), list(sigma(family, n).sigma)) for n in ns]
    if what == "alpha":
        return [("alpha", [family.alpha(n) for n in ns])]
    if what == "alpha-rs":
        return [(str(r), [alpha_rs(family, r, s) for s in ns]) for r in ns]
    if what == "ff":
        return [(str(n), list(classical_faulhaber(n).coeffs)) for n in ns if n % 2]
    raise ValueError(f"unknown table {what!r}; choose from {TABLES}")


def render_table(rows: list[Row], fmt: str, what: str = "", family: str = "") -> str:
    if fmt == "json":
        data = {
            "what": what,
            "family": family,
            "rows": [{"label": label, "values": [format_rational(v) for v in vals]} for label, vals in rows],
        }
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for label, vals in rows:
            writer.writerow([label, *(format_rational(v) for v in vals)])
        return buf.getvalue()
    if fmt == "text":
        return "".join(f"{label}: {', '.join(format_rational(v) for v in vals)}\n" for label, vals in rows)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def emit_table(
    what: str,
    family: AppellFamily,
    n_min: int,
    n_max: int,
    fmt: str = "text",
    out: TextIO | str | None = None,
) -> str:
    """Render a table and write it to ``out`` (a stream or a path) when given."""
    text = render_table(build_table(what, family, n_min, n_max), fmt, what, family.name)
    if isinstance(out, str):
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"{out}: cannot write table: {exc.strerror or exc}") from exc
    elif out is not None:
        out.write(text)
    return text
