"""Text listings in R print style, JSON, and SVG wheels."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

import numpy as np

from .counting import alive_count, twin_count
from .errors import BudgetExceeded, HydraError
from .hydra import DEFAULT_BUDGET, Hydra, Snake, count_only, is_natural, natural, select_heads, selected_positions
from .metrics import DistanceTable, GapVector
from .primes import is_prime

MARK = "pair-> "


def listed_next_prime(primes: Sequence[int]) -> int:
    """Next prime as shown in a listing header.

    Smallest prime outside P exceeding the second-to-last split prime. For any
    natural prime set this is the smallest prime not in P.
    """
    floor = primes[-2] if len(primes) >= 2 else 1
    p = floor + 1
    while p in primes or not is_prime(p):
        p += 1
    return p


def header_fields(H: Hydra) -> list[list[str]]:
    P = H.primes
    k2 = str(twin_count(P)) if {2, 3} <= set(P) else "NA"
    return [
        [f"P(H) = {{{', '.join(map(str, P))}}}", f"p(H) = {P[-1] if P else 'NA'}", f"p'(H) = {listed_next_prime(P)}"],
        [f"k(H) = {H.wavelength}", f"k1(H) = {alive_count(P)}", f"k2(H) = {k2}"],
    ]


def _header_lines(H: Hydra, layout: str) -> list[str]:
    title = f"H({', '.join(map(str, H.primes))})"
    lines = [title]
    for a, b, c in header_fields(H):
        if layout == "tabbed":
            # cat() with "\t\t" separators, expanded at 8-column tab stops
            lines.append(" \t\t ".join([" " + a, b, c]).expandtabs(8))
        elif layout == "columns":
            lines.append((" " + a).ljust(25) + b.rjust(9) + c.rjust(20))
        else:
            raise ValueError(f"unknown header layout {layout!r}")
    return lines


def _row_label(s: Snake) -> str:
    idx = str(s.index)
    return f"s({idx if idx else s.head})"


def render_hydra_text(
    H: Hydra,
    selector: str = "alive",
    tail_count: int = 4,
    header: bool = True,
    layout: str = "tabbed",
    mark: Iterable[int] | None = None,
) -> str:
    """One row ``s(<index>) = <head> | <tail> ...`` per selected snake.

    All numbers share one width, the widest printed number. ``mark`` is a set
    of heads to flag with a ``pair->`` margin.
    """
    snakes = list(H.snakes(selector))
    rows = [(s, s.tail(tail_count)) for s in snakes]
    width = max((len(str(n)) for s, t in rows for n in [s.head, *t]), default=1)
    label_w = max((len(_row_label(s)) for s in snakes), default=0)
    marked = None if mark is None else set(mark)
    lines = _header_lines(H, layout) if header else []
    for s, tail in rows:
        body = " ".join(str(n).rjust(width) for n in tail)
        line = f"{_row_label(s).ljust(label_w)} = {str(s.head).rjust(width)} | {body} ..."
        if marked is not None:
            line = (MARK if s.head in marked else " " * len(MARK)) + line
        lines.append(line)
    return "\n".join(lines) + "\n"


def render_named(names: Sequence[str], values: Sequence) -> str:
    """R's print of a named vector: names above values, one common column width."""
    w = max([len(n) for n in names] + [len(str(v)) for v in values])
    top = " ".join(n.rjust(w) for n in names) + " "
    bottom = " ".join(str(v).rjust(w) for v in values)
    return top + "\n" + bottom + "\n"


def render_gaps(gv: GapVector) -> str:
    return render_named(gv.labels, gv.values.tolist())


def render_table(hist: dict[int, int]) -> str:
    """R's print of table(): blank line, values row, counts row."""
    keys = sorted(hist)
    w = max(len(str(x)) for k in keys for x in (k, hist[k]))
    top = " ".join(str(k).rjust(w) for k in keys)
    bottom = " ".join(str(hist[k]).rjust(w) for k in keys)
    return f"\n{top} \n{bottom} \n"


def render_histogram_compact(hist: dict[int, int]) -> str:
    return " ".join(f"{k}:{hist[k]}" for k in sorted(hist))


def render_matrix(table: DistanceTable) -> str:
    labels = table.labels
    lw = max((len(s) for s in labels), default=0)
    cw = max([len(s) for s in labels] + [len(str(int(table.matrix.max()))) if labels else 1])
    lines = [" " * lw + "".join(" " + s.rjust(cw) for s in labels)]
    for name, row in zip(labels, table.matrix.tolist()):
        lines.append(name.ljust(lw) + "".join(" " + str(v).rjust(cw) for v in row))
    return "\n".join(lines) + "\n"


# -- JSON -------------------------------------------------------------------

def hydra_to_dict(H: Hydra) -> dict:
    P = H.primes
    out = {
        "primes": list(P),
        "wavelength": str(H.wavelength),
        "natural": is_natural(H),
        "materialized": H.materialized,
        "counts": {
            "k": str(H.wavelength),
            "k1": str(alive_count(P)),
            "k2_twin": str(twin_count(P)) if {2, 3} <= set(P) else None,
        },
    }
    if H.materialized:
        out["view"] = H.is_view
        out["snakes"] = [
            {"head": s.head, "index": str(s.index), "alive": s.alive} for s in H.snakes("all")
        ]
    return out


def render_json(H: Hydra, indent: int | None = None) -> str:
    return json.dumps(hydra_to_dict(H), indent=indent)


def hydra_from_json(text: str | dict, budget=None) -> Hydra:
    """Rebuild a hydra from :func:`render_json` output."""
    data = json.loads(text) if isinstance(text, str) else text
    primes = [int(p) for p in data["primes"]]
    if str(math.prod(primes)) != data["wavelength"]:
        raise HydraError("wavelength does not match primes")
    if "snakes" not in data:
        return count_only(primes)
    H = natural(primes, budget or DEFAULT_BUDGET)
    heads = [int(s["head"]) for s in data["snakes"]]
    if data.get("view"):
        H = select_heads(H, heads)
    stored = {int(s["head"]): bool(s["alive"]) for s in data["snakes"]}
    for s in H.snakes("all"):
        if stored.get(s.head) != s.alive:
            raise HydraError(f"snake {s.head} alive flag disagrees with its primes")
    return H


# -- SVG wheels ---------------------------------------------------------------

GREEN, GRAY, RED, DARKGRAY, CYAN = "#2ca02c", "#bdbdbd", "#d62728", "#555555", "#17becf"
MAX_SPOKES = 10_000


@dataclass
class WheelStyle:
    rings: list[Hydra]
    layout: str = "sorted"  # or "recursive"
    highlight: str = "none"  # or "twins"
    size: int = 800
    colors: dict = field(default_factory=lambda: {
        "alive": GREEN, "dead": GRAY, "twin": RED, "half_dead": DARKGRAY, "half_alive": CYAN,
    })

    def __post_init__(self):
        if self.layout not in ("sorted", "recursive"):
            raise ValueError(f"layout must be sorted or recursive, got {self.layout!r}")
        if self.highlight not in ("none", "twins"):
            raise ValueError(f"highlight must be none or twins, got {self.highlight!r}")
        if not self.rings:
            raise ValueError("at least one ring is required")
        if self.layout == "recursive":
            for inner, outer in zip(self.rings, self.rings[1:]):
                if outer.primes[:-1] != inner.primes:
                    raise ValueError(f"ring H{outer.primes} does not extend H{inner.primes} by one prime")


def spoke_positions(H: Hydra, layout: str) -> np.ndarray:
    """Angular slot of each snake; recursive slots nest children inside their ancestor."""
    h0 = H.heads - 1
    if layout == "sorted":
        return h0
    pos = np.zeros_like(h0)
    K = 1
    for p in H.primes:
        pos = pos * p + (h0 // K) % p
        K *= p
    return pos


def _twin_roles(H: Hydra) -> dict[int, str]:
    """Map head -> twin / half_alive / half_dead for distance-2 neighbourhoods."""
    k = H.wavelength
    alive = dict(zip(H.heads.tolist(), H.alive.tolist()))
    twins = set(H.heads[selected_positions(H, "twins")].tolist())
    roles = {h: "twin" for h in twins}
    if k <= 2:
        return roles
    for h, a in alive.items():
        partner = (h + 1) % k + 1  # h+2 wrapped into 1..k
        b = alive.get(partner)
        if b is None or a == b:
            continue
        for x, x_alive in ((h, a), (partner, b)):
            if x not in roles:
                roles[x] = "half_alive" if x_alive else "half_dead"
    return roles


def _point(cx: float, cy: float, r: float, frac: float) -> tuple[float, float]:
    # angle 0 at twelve o'clock, increasing clockwise
    a = 2 * math.pi * frac
    return cx + r * math.sin(a), cy - r * math.cos(a)


def _sector(cx, cy, r0, r1, f0, f1) -> str:
    if f1 - f0 >= 1:
        # full annulus as two half arcs each way
        pts = []
        for r, sweep in ((r1, 1), (r0, 0)):
            x0, y0 = _point(cx, cy, r, 0)
            x1, y1 = _point(cx, cy, r, 0.5)
            pts.append(f"M{x0:.3f},{y0:.3f} A{r:.3f},{r:.3f} 0 0 {sweep} {x1:.3f},{y1:.3f} "
                       f"A{r:.3f},{r:.3f} 0 0 {sweep} {x0:.3f},{y0:.3f} Z")
        return " ".join(pts)
    large = 1 if f1 - f0 > 0.5 else 0
    ax, ay = _point(cx, cy, r1, f0)
    bx, by = _point(cx, cy, r1, f1)
    c_x, c_y = _point(cx, cy, r0, f1)
    dx, dy = _point(cx, cy, r0, f0)
    return (f"M{ax:.3f},{ay:.3f} A{r1:.3f},{r1:.3f} 0 {large} 1 {bx:.3f},{by:.3f} "
            f"L{c_x:.3f},{c_y:.3f} A{r0:.3f},{r0:.3f} 0 {large} 0 {dx:.3f},{dy:.3f} Z")


def _text(x, y, s, size, **attrs) -> str:
    extra = "".join(f' {k.rstrip("_").replace("_", "-")}="{v}"' for k, v in attrs.items())
    return (f'<text x="{x:.3f}" y="{y:.3f}" font-size="{size:.2f}" text-anchor="middle" '
            f'dominant-baseline="central"{extra}>{escape(str(s))}</text>')


def render_wheel_svg(style: WheelStyle, output_path: str | None = None) -> str:
    """Concentric rings, innermost first, one arc segment per snake."""
    for H in style.rings:
        H.require_table()
        if H.is_view:
            raise HydraError("wheel rings must be complete hydras, not views")
    if style.rings[-1].wavelength > MAX_SPOKES:
        raise BudgetExceeded(f"outer ring has {style.rings[-1].wavelength} spokes, limit is {MAX_SPOKES}")

    size = style.size
    cx = cy = size / 2
    single = len(style.rings) == 1 and style.layout == "sorted"
    outer = size * (0.40 if single else 0.48)
    hub = size * (0.22 if single else 0.06)
    band = (outer - hub) / len(style.rings)
    c = style.colors

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}" font-family="sans-serif">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for r, H in enumerate(style.rings):
        r0, r1 = hub + r * band, hub + (r + 1) * band
        k = H.wavelength
        pos = spoke_positions(H, style.layout)
        roles = _twin_roles(H) if style.highlight == "twins" else {}
        arc = 2 * math.pi * (r0 + r1) / 2 / k
        font = min(band * 0.45, arc * 0.6)
        stroke = ' stroke="white" stroke-width="0.5"' if arc > 4 else ""
        out.append(f'<g class="ring" data-ring="{r}" data-primes="{",".join(map(str, H.primes))}" '
                   f'data-k="{k}" data-layout="{style.layout}">')
        for h, a, slot in zip(H.heads.tolist(), H.alive.tolist(), pos.tolist()):
            f0, f1 = slot / k, (slot + 1) / k
            fill = c["alive"] if a else c["dead"]
            state = "alive" if a else "dead"
            out.append(f'<path class="segment {state}" data-head="{h}" fill="{fill}"{stroke} '
                       f'd="{_sector(cx, cy, r0, r1, f0, f1)}"/>')
            role = roles.get(h)
            if role:
                out.append(f'<path class="highlight {role}" data-head="{h}" fill="{c[role]}" '
                           f'd="{_sector(cx, cy, r0 + band * 0.55, r1 - band * 0.05, f0, f1)}"/>')
            if font >= 1:
                x, y = _point(cx, cy, r0 + band * 0.3, (f0 + f1) / 2)
                out.append(_text(x, y, h, font, class_="head"))
        out.append("</g>")

    if single:
        H = style.rings[0]
        k = H.wavelength
        font = max(6.0, min(14.0, 2 * math.pi * hub / k * 0.8))
        ah = H.alive_heads()
        gaps = np.append(np.diff(ah), ah[0] + k - ah[-1])
        out.append('<g class="gaps">')
        for h, g in zip(ah.tolist(), gaps.tolist()):
            x, y = _point(cx, cy, hub - font * 1.2, (h - 0.5) / k)
            out.append(_text(x, y, g, font, class_="gap", data_head=h))
        out.append("</g>")
        out.append('<g class="tails">')
        for h in H.heads.tolist():
            x, y = _point(cx, cy, outer + font * 1.5, (h - 0.5) / k)
            out.append(_text(x, y, h + k, font, class_="tail", data_head=h))
            x, y = _point(cx, cy, outer + font * 3.2, (h - 0.5) / k)
            out.append(_text(x, y, h + 2 * k, font, class_="tail", data_head=h))
        out.append("</g>")

    out.append("</svg>")
    doc = "\n".join(out) + "\n"
    if output_path is not None:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(doc)
    return doc
