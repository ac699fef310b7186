"""Plain-text spacetime diagrams for CA runs and Turing machine tapes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .machine import (
    TRANSITIONS,
    TapeSnapshot,
    TmConfiguration,
    default_max_steps,
    iter_switches,
    tm_step,
)
from .words import TM_ALPHABET

CA_GLYPHS: Mapping[str, str] = {"0": ".", "1": "#"}
# Identity, so rendered tape rows re-parse as words.
TM_GLYPHS: Mapping[str, str] = {s: s for s in TM_ALPHABET}

MODES = ("every", "left", "right", "interleaved")

Span = Optional[tuple[int, int]]


@dataclass(frozen=True)
class RenderStyle:
    glyphs: Mapping[str, str] = field(default_factory=lambda: dict(CA_GLYPHS))
    emphasis: bool = False
    mode: str = "left"
    markers: tuple[str, str] = ("[", "]")

    def __post_init__(self):
        if len(set(self.glyphs.values())) != len(self.glyphs):
            raise ValueError("glyph map must be injective")
        if self.mode not in MODES:
            raise ValueError(f"unknown row selection mode {self.mode!r}")


def render_spacetime(
    rows: Sequence[str], style: RenderStyle = RenderStyle(), spans: Sequence[Span] = ()
) -> str:
    """One line per row. With emphasis on, ``spans[i]`` (column range) of row i is bracketed."""
    open_mark, close_mark = style.markers
    lines = []
    for i, row in enumerate(rows):
        text = "".join(style.glyphs[s] for s in row)
        span = spans[i] if style.emphasis and i < len(spans) else None
        if span is not None:
            lo, hi = span
            text = text[:lo] + open_mark + text[lo:hi] + close_mark + text[hi:]
        lines.append(text)
    return "".join(line + "\n" for line in lines)


@dataclass(frozen=True)
class TapeRow:
    """A selected tape, tagged with the causal-future row it belongs to."""

    kind: str
    time: int
    head: int
    tape: TapeSnapshot
    cone_row: int


def select_tape_rows(
    cfg: TmConfiguration,
    left_switches: int,
    mode: str = "left",
    max_steps: int | None = None,
) -> list[TapeRow]:
    """Tapes up to the ``left_switches``-th left switch, picked per ``mode``.

    A right-switch row belongs to the cone row of the left switch that
    follows it; in ``every`` mode each step belongs to the next left switch.
    """
    if max_steps is None:
        max_steps = default_max_steps(left_switches, len(cfg.tape.zone.core))
    if left_switches <= 0:
        return []
    if mode == "every":
        return _every_step(cfg, left_switches, max_steps)
    rows = []
    seen_left = 0
    for switch in iter_switches(cfg, max_steps, TRANSITIONS, right=mode != "left"):
        if switch.side == "left":
            if mode != "right":
                rows.append(TapeRow("left", switch.time, switch.head, switch.tape, seen_left))
            seen_left += 1
            if seen_left == left_switches:
                break
        else:
            rows.append(TapeRow("right", switch.time, switch.head, switch.tape, seen_left))
    return rows


def _every_step(cfg: TmConfiguration, left_switches: int, max_steps: int) -> list[TapeRow]:
    switch_times = {s.time for s in _left_switches(cfg, left_switches, max_steps)}
    last = max(switch_times)
    rows = []
    seen_left = 0
    current = cfg
    for t in range(last + 1):
        kind = "left" if t in switch_times else "step"
        rows.append(TapeRow(kind, t, current.head, current.tape.snapshot(), seen_left))
        if kind == "left":
            seen_left += 1
        current = tm_step(current)
    return rows


def _left_switches(cfg, count, max_steps):
    out = []
    for switch in iter_switches(cfg, max_steps):
        out.append(switch)
        if len(out) == count:
            break
    return out


def tape_diagram(
    rows: Sequence[TapeRow],
    core_length: int,
    lo: int,
    hi: int,
    style: RenderStyle,
) -> str:
    """Render tape rows on cells ``lo..hi-1``, bracketing each row's causal future."""
    texts = [row.tape.segment(lo, hi) for row in rows]
    spans = []
    for row in rows:
        k = row.cone_row
        start, stop = max(-k, lo), min(core_length + k, hi)
        spans.append((start - lo, stop - lo) if start < stop else None)
    return render_spacetime(texts, style, spans)
