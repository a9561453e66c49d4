"""Self-contained SVG charts, written without a plotting library.

A table maps series names to point tuples; the chart kind fixes their shape:

    line      (x, y)         polyline per series, a single marker for 1 point
    band      (x, lo, hi)    filled band with edge lines
    bar       (x, y)         grouped bars over categorical x
    interval  (x, lo, hi)    grouped vertical segments over categorical x

Output depends only on (table, spec): same input, same bytes.
"""

import xml.etree.ElementTree as ET
from typing import Dict, List, Literal, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from anytime_cs.exceptions import EmptyTableError

Point = Tuple[float, ...]
Table = Mapping[str, Sequence[Point]]

WIDTH = 760
HEIGHT = 440
LEFT, RIGHT, TOP, BOTTOM = 70, 170, 40, 56
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]
TICKS = 5


class ChartSpec(BaseModel):
    """Labels and layout of one chart."""

    model_config = ConfigDict(frozen=True)

    title: str
    x_label: str
    y_label: str
    kind: Literal["line", "band", "bar", "interval"] = "line"
    y_range: Optional[Tuple[float, float]] = None
    markers: Dict[float, float] = Field(default_factory=dict, description="x -> y reference dots")
    marker_label: str = "truth"


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    return f"{v:.4g}"


class _Frame:
    """Maps data coordinates to pixels inside the plotting area."""

    def __init__(self, x_lo: float, x_hi: float, y_lo: float, y_hi: float):
        self.x_lo, self.x_hi = x_lo, (x_hi if x_hi > x_lo else x_lo + 1.0)
        self.y_lo, self.y_hi = y_lo, (y_hi if y_hi > y_lo else y_lo + 1.0)
        self.width = WIDTH - LEFT - RIGHT
        self.height = HEIGHT - TOP - BOTTOM

    def px(self, x: float) -> float:
        return LEFT + (x - self.x_lo) / (self.x_hi - self.x_lo) * self.width

    def py(self, y: float) -> float:
        return TOP + (1.0 - (y - self.y_lo) / (self.y_hi - self.y_lo)) * self.height


def _value_range(table: Table, spec: ChartSpec) -> Tuple[float, float]:
    values = [v for points in table.values() for p in points for v in p[1:]]
    values.extend(spec.markers.values())
    lo, hi = min(values), max(values)
    if spec.kind == "bar":
        lo = min(lo, 0.0)
    pad = 0.05 * (hi - lo) if hi > lo else 0.5
    return lo - pad, hi + pad


def _axes(
    root: ET.Element, frame: _Frame, spec: ChartSpec, x_ticks: List[Tuple[float, str]]
) -> None:
    axis = ET.SubElement(root, "g", {"stroke": "#333333", "stroke-width": "1"})
    x0, x1 = LEFT, LEFT + frame.width
    y0, y1 = TOP + frame.height, TOP
    ET.SubElement(axis, "line", {"x1": _fmt(x0), "y1": _fmt(y0), "x2": _fmt(x1), "y2": _fmt(y0)})
    ET.SubElement(axis, "line", {"x1": _fmt(x0), "y1": _fmt(y0), "x2": _fmt(x0), "y2": _fmt(y1)})

    labels = ET.SubElement(root, "g", {"font-family": "sans-serif", "font-size": "11"})
    for x, text in x_ticks:
        px = frame.px(x)
        tick = {"x1": _fmt(px), "y1": _fmt(y0), "x2": _fmt(px), "y2": _fmt(y0 + 4)}
        ET.SubElement(axis, "line", tick)
        node = ET.SubElement(
            labels, "text", {"x": _fmt(px), "y": _fmt(y0 + 17), "text-anchor": "middle"}
        )
        node.text = text
    for i in range(TICKS + 1):
        y = frame.y_lo + (frame.y_hi - frame.y_lo) * i / TICKS
        py = frame.py(y)
        tick = {"x1": _fmt(x0 - 4), "y1": _fmt(py), "x2": _fmt(x0), "y2": _fmt(py)}
        ET.SubElement(axis, "line", tick)
        node = ET.SubElement(
            labels, "text", {"x": _fmt(x0 - 7), "y": _fmt(py + 4), "text-anchor": "end"}
        )
        node.text = _tick_label(y)

    title = ET.SubElement(
        labels,
        "text",
        {"x": _fmt(WIDTH / 2), "y": "22", "text-anchor": "middle", "font-size": "15"},
    )
    title.text = spec.title
    x_title = ET.SubElement(
        labels,
        "text",
        {"x": _fmt(LEFT + frame.width / 2), "y": _fmt(HEIGHT - 12), "text-anchor": "middle"},
    )
    x_title.text = spec.x_label
    y_title = ET.SubElement(
        labels,
        "text",
        {
            "x": "16",
            "y": _fmt(TOP + frame.height / 2),
            "text-anchor": "middle",
            "transform": f"rotate(-90 16 {_fmt(TOP + frame.height / 2)})",
        },
    )
    y_title.text = spec.y_label


def _legend(root: ET.Element, entries: List[Tuple[str, str]]) -> None:
    legend = ET.SubElement(root, "g", {"font-family": "sans-serif", "font-size": "12"})
    x = WIDTH - RIGHT + 16
    for i, (name, color) in enumerate(entries):
        y = TOP + 8 + 20 * i
        swatch = {"x": _fmt(x), "y": _fmt(y - 9), "width": "14", "height": "10", "fill": color}
        ET.SubElement(legend, "rect", swatch)
        node = ET.SubElement(legend, "text", {"x": _fmt(x + 20), "y": _fmt(y)})
        node.text = name


def _numeric_ticks(frame: _Frame) -> List[float]:
    return [frame.x_lo + (frame.x_hi - frame.x_lo) * i / TICKS for i in range(TICKS + 1)]


def _draw_continuous(root: ET.Element, table: Table, spec: ChartSpec, frame: _Frame) -> None:
    for i, (name, points) in enumerate(table.items()):
        color = PALETTE[i % len(PALETTE)]
        group = ET.SubElement(root, "g", {"class": "series", "data-name": name})
        if spec.kind == "band" and len(points) > 1:
            upper = [(frame.px(p[0]), frame.py(p[2])) for p in points]
            lower = [(frame.px(p[0]), frame.py(p[1])) for p in reversed(points)]
            ET.SubElement(
                group,
                "polygon",
                {
                    "points": " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in upper + lower),
                    "fill": color,
                    "fill-opacity": "0.15",
                    "stroke": "none",
                },
            )
            edges = [[(p[0], p[1]) for p in points], [(p[0], p[2]) for p in points]]
        else:
            edges = [[(p[0], p[1]) for p in points]]
            if spec.kind == "band":
                edges.append([(p[0], p[2]) for p in points])
        for edge in edges:
            if len(edge) == 1:
                x, y = edge[0]
                ET.SubElement(
                    group,
                    "circle",
                    {"cx": _fmt(frame.px(x)), "cy": _fmt(frame.py(y)), "r": "3", "fill": color},
                )
                continue
            ET.SubElement(
                group,
                "polyline",
                {
                    "points": " ".join(f"{_fmt(frame.px(x))},{_fmt(frame.py(y))}" for x, y in edge),
                    "fill": "none",
                    "stroke": color,
                    "stroke-width": "1.5",
                },
            )


def _draw_categorical(
    root: ET.Element, table: Table, spec: ChartSpec, frame: _Frame, categories: List[float]
) -> None:
    slot = frame.width / len(categories)
    n_series = len(table)
    for i, (name, points) in enumerate(table.items()):
        color = PALETTE[i % len(PALETTE)]
        group = ET.SubElement(root, "g", {"class": "series", "data-name": name})
        for p in points:
            center = LEFT + slot * (categories.index(p[0]) + 0.5)
            offset = (i - (n_series - 1) / 2) * slot * 0.8 / n_series
            if spec.kind == "bar":
                top, base = frame.py(p[1]), frame.py(max(frame.y_lo, 0.0))
                bar_width = slot * 0.8 / n_series
                ET.SubElement(
                    group,
                    "rect",
                    {
                        "x": _fmt(center + offset - bar_width / 2),
                        "y": _fmt(min(top, base)),
                        "width": _fmt(bar_width),
                        "height": _fmt(abs(base - top)),
                        "fill": color,
                    },
                )
            else:
                x = _fmt(center + offset)
                ET.SubElement(
                    group,
                    "line",
                    {
                        "x1": x,
                        "y1": _fmt(frame.py(p[1])),
                        "x2": x,
                        "y2": _fmt(frame.py(p[2])),
                        "stroke": color,
                        "stroke-width": "2",
                    },
                )
    if spec.markers:
        dots = ET.SubElement(root, "g", {"class": "markers", "fill": "#000000"})
        for x, y in sorted(spec.markers.items()):
            if x in categories:
                cx = LEFT + slot * (categories.index(x) + 0.5)
                ET.SubElement(dots, "circle", {"cx": _fmt(cx), "cy": _fmt(frame.py(y)), "r": "3"})


def emit_svg(table: Table, spec: ChartSpec) -> str:
    """Render a table as an SVG document string."""
    table = {name: list(points) for name, points in table.items() if len(points) > 0}
    if not table:
        raise EmptyTableError(f"nothing to plot for '{spec.title}'")

    y_lo, y_hi = spec.y_range if spec.y_range is not None else _value_range(table, spec)
    categorical = spec.kind in ("bar", "interval")
    if categorical:
        categories = sorted({p[0] for points in table.values() for p in points})
        frame = _Frame(0.0, 1.0, y_lo, y_hi)
        slot = frame.width / len(categories)
        x_ticks = [
            ((slot * (k + 0.5)) / frame.width, _tick_label(c)) for k, c in enumerate(categories)
        ]
    else:
        xs = [p[0] for points in table.values() for p in points]
        frame = _Frame(min(xs), max(xs), y_lo, y_hi)
        x_ticks = [(x, _tick_label(x)) for x in _numeric_ticks(frame)]

    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": str(WIDTH),
            "height": str(HEIGHT),
            "viewBox": f"0 0 {WIDTH} {HEIGHT}",
        },
    )
    ET.SubElement(root, "rect", {"width": str(WIDTH), "height": str(HEIGHT), "fill": "#ffffff"})
    _axes(root, frame, spec, x_ticks)
    if categorical:
        _draw_categorical(root, table, spec, frame, categories)
    else:
        _draw_continuous(root, table, spec, frame)

    entries = [(name, PALETTE[i % len(PALETTE)]) for i, name in enumerate(table)]
    if spec.markers:
        entries.append((spec.marker_label, "#000000"))
    _legend(root, entries)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"
