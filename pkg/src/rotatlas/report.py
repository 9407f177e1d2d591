"""Canonical serialization and rendering of atlases and sweep statistics.

Endpoint listings use ASCII direction marks: ``>r`` means the boundary
rational r belongs to the proper interval on its right, ``<r`` to the one on
its left, and a bare r is a singleton interval (the final boundary 2 is
always bare; it is the open right edge).  JSON, CSV and SVG output is
byte-deterministic for fixed inputs and package version.
"""

from __future__ import annotations

import csv
import io
import json
import os
from fractions import Fraction
from typing import Iterable

from .intervals import Interval, parse_rational
from .partition import PartitionAtlas, ShellStats, SweepReport
from .tail import tail_of


def render_endpoint_listing(atlas: PartitionAtlas) -> str:
    """Ascending boundary rationals of the body, each with its direction mark.

    Every boundary point belongs to exactly one entry, which owns its mark;
    boundary points owned by no proper interval (singletons, and the open
    right edge 2) stay bare.
    """
    values: set[Fraction] = set()
    marks: dict[Fraction, str] = {}
    for ival, _ in atlas.body:
        values.update((ival.lo, ival.hi))
        if not ival.is_singleton:
            if ival.lo_closed:
                marks[ival.lo] = ">"
            if ival.hi_closed:
                marks[ival.hi] = "<"
    return " ".join(f"{marks.get(v, '')}{v}" for v in sorted(values))


def render_atlas_table(atlas: PartitionAtlas) -> str:
    """Human-oriented per-entry view of one atlas."""
    label = atlas.tail.label
    lines = [
        f"initial pair ({atlas.a0},{atlas.a1})  label s={label.s} d={label.d}"
        + (f" K={label.K}" if label.K is not None else ""),
        f"tail {atlas.tail.interval}",
        f"body {atlas.body_range}: {atlas.interval_count} intervals, "
        f"{atlas.singleton_count} singletons",
        f"endpoints: {render_endpoint_listing(atlas)}",
    ]
    for ival, word in atlas.body:
        lines.append(f"  {str(ival):>22}  len {len(word):>4}  ({', '.join(map(str, word))})")
    return "\n".join(lines)


def atlas_to_dict(atlas: PartitionAtlas) -> dict:
    label = atlas.tail.label
    kind = "triangular" if label.d > 0 else ("full" if label.s == 0 else "constant")
    return {
        "a0": atlas.a0,
        "a1": atlas.a1,
        "s": label.s,
        "d": label.d,
        "K": label.K,
        "tail": {
            "lo": str(atlas.tail.interval.lo),
            "hi": str(atlas.tail.interval.hi),
            "kind": kind,
        },
        "body": [
            {
                "interval": str(ival),
                "lo": str(ival.lo),
                "lo_closed": ival.lo_closed,
                "hi": str(ival.hi),
                "hi_closed": ival.hi_closed,
                "cycle": list(word),
                "length": len(word),
            }
            for ival, word in atlas.body
        ],
    }


def atlas_from_dict(data: dict) -> PartitionAtlas:
    """Rebuild an atlas from its JSON form (tail is reconstructed from the pair)."""
    a0, a1 = data["a0"], data["a1"]
    tail = tail_of(a0, a1)
    if (str(tail.interval.lo), str(tail.interval.hi)) != (
        data["tail"]["lo"],
        data["tail"]["hi"],
    ):
        raise ValueError(f"tail of ({a0},{a1}) does not match file contents")
    body = tuple(
        (
            Interval(
                parse_rational(entry["lo"]),
                parse_rational(entry["hi"]),
                entry["lo_closed"],
                entry["hi_closed"],
            ),
            tuple(entry["cycle"]),
        )
        for entry in data["body"]
    )
    return PartitionAtlas(a0, a1, tail, body)


def atlas_to_json(atlas: PartitionAtlas) -> str:
    return json.dumps(atlas_to_dict(atlas), indent=2) + "\n"


def atlas_from_json(text: str) -> PartitionAtlas:
    return atlas_from_dict(json.loads(text))


def write_atlas_json(atlas: PartitionAtlas, out_dir: str) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"atlas_{atlas.a0}_{atlas.a1}.json")
    with open(path, "w") as fh:
        fh.write(atlas_to_json(atlas))
    return path


def _format_avg(value: Fraction) -> str:
    return f"{float(value):.6g}"


def sweep_summary_csv(report: SweepReport) -> str:
    """Per-point sweep summary: m, a0, a1, intervals, singletons, max_len, avg_len."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "a0", "a1", "intervals", "singletons", "max_len", "avg_len"])
    for p in report.points:
        writer.writerow(
            [p.shell, p.a0, p.a1, p.intervals, p.singletons, p.max_len, _format_avg(p.avg_len)]
        )
    return buf.getvalue()


def _table_rows_cardinality(shells: Iterable[ShellStats]) -> list[list[str]]:
    rows = [["m", "max at (a0,a1)", "intervals", "singletons"]]
    for s in shells:
        rows.append(
            [
                str(s.m),
                f"({s.card_point[0]},{s.card_point[1]})",
                str(s.cardinality),
                str(s.singletons),
            ]
        )
    return rows


def _table_rows_length(shells: Iterable[ShellStats]) -> list[list[str]]:
    rows = [
        ["m", "max at (a0,a1)", "interval", "max length", "avg (all atlases)", "avg (max point)"]
    ]
    for s in shells:
        rows.append(
            [
                str(s.m),
                f"({s.len_point[0]},{s.len_point[1]})",
                s.max_len_interval,
                str(s.max_len),
                _format_avg(s.avg_len_pooled),
                _format_avg(s.avg_len_at_max_point),
            ]
        )
    return rows


def _align(rows: list[list[str]]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
    )


def _csv_text(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def render_tables(report: SweepReport, fmt: str = "table") -> str:
    """The two sweep statistics tables, as aligned text or CSV."""
    shells = report.shells()
    card = _table_rows_cardinality(shells)
    length = _table_rows_length(shells)
    if fmt == "csv":
        return _csv_text(card) + "\n" + _csv_text(length)
    return (
        "partition cardinality per shell\n"
        + _align(card)
        + "\n\ncycle length per shell\n"
        + _align(length)
        + "\n"
    )


# --- diagram -----------------------------------------------------------------

_SVG_WIDTH = 900
_SVG_HEIGHT = 120
_MARGIN = 30
_BAR_Y = 40
_BAR_H = 28


def _x(value: Fraction) -> float:
    frac = (value - Fraction(-2)) / 4
    return round(_MARGIN + float(frac) * (_SVG_WIDTH - 2 * _MARGIN), 2)


def _color(length: int, max_length: int) -> str:
    # Hue runs blue (short cycles) to red (long); rendered edge only.
    import math

    if max_length <= 1:
        ratio = 0.0
    else:
        ratio = math.log(length) / math.log(max_length)
    hue = round(240 * (1 - ratio))
    return f"hsl({hue},70%,50%)"


def emit_diagram(atlas: PartitionAtlas) -> str:
    """A deterministic SVG number line of the atlas.

    Proper intervals are colored segments (color keyed to cycle length),
    singletons are tick marks, and the tail is a hatched region.  Geometry is
    computed from exact rationals; rounding happens only at rendering.
    """
    max_len = max(len(word) for _, word in atlas.body)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_WIDTH}" '
        f'height="{_SVG_HEIGHT}" viewBox="0 0 {_SVG_WIDTH} {_SVG_HEIGHT}">',
        "<defs>"
        '<pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" '
        'patternTransform="rotate(45)">'
        '<line x1="0" y1="0" x2="0" y2="6" stroke="#888" stroke-width="1.5"/>'
        "</pattern></defs>",
        f'<rect x="0" y="0" width="{_SVG_WIDTH}" height="{_SVG_HEIGHT}" fill="white"/>',
        f'<text x="{_MARGIN}" y="20" font-size="13" font-family="monospace">'
        f"initial pair ({atlas.a0},{atlas.a1})</text>",
    ]
    # hatch the tail region left of the body; empty when the body is everything
    if atlas.tail.interval.lo < atlas.body_range.lo:
        x0, x1 = _x(atlas.tail.interval.lo), _x(atlas.body_range.lo)
        parts.append(
            f'<rect x="{x0}" y="{_BAR_Y}" width="{round(x1 - x0, 2)}" '
            f'height="{_BAR_H}" fill="url(#hatch)"/>'
        )
    for ival, word in atlas.body:
        if ival.is_singleton:
            x = _x(ival.lo)
            parts.append(
                f'<line x1="{x}" y1="{_BAR_Y - 6}" x2="{x}" y2="{_BAR_Y + _BAR_H + 6}" '
                f'stroke="black" stroke-width="1"/>'
            )
        else:
            x0, x1 = _x(ival.lo), _x(ival.hi)
            parts.append(
                f'<rect x="{x0}" y="{_BAR_Y}" width="{round(x1 - x0, 2)}" '
                f'height="{_BAR_H}" fill="{_color(len(word), max_len)}"/>'
            )
    axis_y = _BAR_Y + _BAR_H + 24
    for v in (-2, -1, 0, 1, 2):
        x = _x(Fraction(v))
        parts.append(
            f'<text x="{x}" y="{axis_y}" font-size="12" font-family="monospace" '
            f'text-anchor="middle">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
