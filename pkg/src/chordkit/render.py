"""Arc drawings of chord diagrams as SVG or TikZ source.

Points sit on a baseline one unit apart; every chord is a two-segment peak
whose apex height is half its length. With a highlight ``k`` the chords
touching the middle block are drawn thick, the rest thin, and a brace marks
the middle indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagram import Chord, ChordDiagram, DomainError, RegionSplit, classify

UNIT = 30  # svg pixels per index step
MARGIN = 20


@dataclass(frozen=True)
class RenderSpec:
    format: str = "svg"
    highlight_k: Optional[int] = None
    marked: Optional[Chord] = None

    def __post_init__(self):
        if self.format not in ("svg", "tikz"):
            raise DomainError(f"unknown render format {self.format!r}; use svg or tikz")


def _styles(d: ChordDiagram, spec: RenderSpec) -> list[tuple[Chord, str]]:
    mid: frozenset[Chord] = frozenset()
    if spec.highlight_k is not None:
        mid = classify(d, spec.highlight_k).mid
    out = []
    for c in d.chords:
        if spec.marked is not None and c == spec.marked:
            style = "marked"
        elif spec.highlight_k is None:
            style = "plain"
        else:
            style = "mid" if c in mid else "side"
        out.append((c, style))
    return out


def _fmt(x: float) -> str:
    return f"{x:g}"


def render(d: ChordDiagram, spec: RenderSpec = RenderSpec()) -> str:
    if spec.marked is not None and spec.marked not in d.chords:
        raise DomainError(f"marked chord {spec.marked} is not in the diagram")
    if spec.format == "svg":
        return _render_svg(d, spec)
    return _render_tikz(d, spec)


_SVG_STROKE = {
    "plain": 'stroke="black" stroke-width="1.5"',
    "mid": 'stroke="black" stroke-width="3"',
    "side": 'stroke="black" stroke-width="1"',
    "marked": 'stroke="gray" stroke-width="1.5" stroke-dasharray="4 3"',
}


def _render_svg(d: ChordDiagram, spec: RenderSpec) -> str:
    size = 2 * d.n
    max_len = max(c.length for c in d.chords)
    top = MARGIN + UNIT * max_len / 2
    width = 2 * MARGIN + UNIT * (size - 1)
    height = top + 50

    def x(i: int) -> float:
        return MARGIN + UNIT * (i - 1)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<line class="baseline" x1="{_fmt(x(1))}" y1="{_fmt(top)}" x2="{_fmt(x(size))}" y2="{_fmt(top)}" '
        'stroke="black" stroke-width="1"/>',
    ]
    for c, style in _styles(d, spec):
        xm = (x(c.start) + x(c.end)) / 2
        ym = top - UNIT * c.length / 2
        lines.append(
            f'<path class="arc {style}" d="M {_fmt(x(c.start))} {_fmt(top)} L {_fmt(xm)} {_fmt(ym)} '
            f'L {_fmt(x(c.end))} {_fmt(top)}" fill="none" {_SVG_STROKE[style]}/>'
        )
    for i in range(1, size + 1):
        lines.append(f'<circle class="point" cx="{_fmt(x(i))}" cy="{_fmt(top)}" r="2.5" fill="black"/>')
        lines.append(
            f'<text class="label" x="{_fmt(x(i))}" y="{_fmt(top + 18)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">{i}</text>'
        )
    if spec.highlight_k is not None:
        mid = RegionSplit(d.n, spec.highlight_k).middle
        if len(mid):
            x0, x1 = x(mid[0]) - UNIT * 0.2, x(mid[-1]) + UNIT * 0.2
            yb = top + 26
            xc = (x0 + x1) / 2
            lines.append(
                f'<path class="brace" d="M {_fmt(x0)} {_fmt(yb)} Q {_fmt(x0)} {_fmt(yb + 6)} {_fmt(xc)} {_fmt(yb + 8)} '
                f'Q {_fmt(x1)} {_fmt(yb + 6)} {_fmt(x1)} {_fmt(yb)}" fill="none" stroke="black" stroke-width="1"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


_TIKZ_STYLE = {"plain": "", "mid": "[very thick]", "side": "", "marked": "[gray, dashed]"}


def _render_tikz(d: ChordDiagram, spec: RenderSpec) -> str:
    size = 2 * d.n
    lines = ["\\begin{tikzpicture}[scale=.45]", f"\\draw (0,0) -- ({size - 1},0);"]
    for c, style in _styles(d, spec):
        s, e = c.start - 1, c.end - 1
        lines.append(
            f"\\draw{_TIKZ_STYLE[style]}({s},0) -- ({_fmt((s + e) / 2)},{_fmt(c.length / 2)}) -- ({e},0);"
        )
    for i in range(1, size + 1):
        lines.append(f"\\node [below] at ({i - 1},0) {{{i}}};")
    if spec.highlight_k is not None:
        mid = RegionSplit(d.n, spec.highlight_k).middle
        if len(mid):
            lines.append(
                f"\\draw [decorate,decoration={{brace,amplitude=5pt,mirror}}] "
                f"({_fmt(mid[0] - 1.2)},-1) -- ({_fmt(mid[-1] - 0.8)},-1);"
            )
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
