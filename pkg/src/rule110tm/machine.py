"""The 2-state 5-symbol Turing machine that sweeps back and forth emulating Rule 110."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import StepBudgetExceeded
from .words import (
    ONE,
    ONE_U,
    QUERY,
    TM_ALPHABET,
    ZERO,
    ZERO_U,
    EventualState,
)
from .wrap import left_seed_stem, right_seed_stem


class HeadState(enum.IntEnum):
    NO_CARRY = 0
    CARRY = 1

    @property
    def glyph(self) -> str:
        return "∘" if self is HeadState.NO_CARRY else "•"


# Symbol written, per head state, for each symbol read.
_WRITES = {
    HeadState.NO_CARRY: {ZERO: ZERO_U, ONE: ONE_U, ZERO_U: ZERO, ONE_U: ONE, QUERY: ZERO},
    HeadState.CARRY: {ZERO: ONE_U, ONE: QUERY, ZERO_U: ZERO, ONE_U: ONE, QUERY: ONE},
}

Transition = tuple[str, int, HeadState]
TransitionTable = Mapping[tuple[str, HeadState], Transition]


def _build_table() -> dict[tuple[str, HeadState], Transition]:
    table = {}
    for state in HeadState:
        for symbol in TM_ALPHABET:
            move = -1 if symbol in (ZERO, ONE) else 1
            after = HeadState.CARRY if symbol in (ONE, ONE_U) else HeadState.NO_CARRY
            table[symbol, state] = (_WRITES[state][symbol], move, after)
    return table


TRANSITIONS: dict[tuple[str, HeadState], Transition] = _build_table()


@dataclass(frozen=True)
class TapeSnapshot:
    """A frozen tape: a materialized window over an unchanged zone description."""

    window: str
    base: int
    zone: EventualState

    def __getitem__(self, c: int) -> str:
        i = c - self.base
        if 0 <= i < len(self.window):
            return self.window[i]
        return self.zone[c]

    def segment(self, lo: int, hi: int) -> str:
        return "".join(self[c] for c in range(lo, hi))


class TmTape:
    """An infinite tape. Cells outside the materialized window read from ``zone``."""

    def __init__(self, zone: EventualState, lo: int = 0, hi: int = 0):
        self.zone = zone
        self.base = lo
        self.window = list(zone.segment(lo, hi))

    @property
    def hi(self) -> int:
        return self.base + len(self.window)

    def __getitem__(self, c: int) -> str:
        i = c - self.base
        if 0 <= i < len(self.window):
            return self.window[i]
        return self.zone[c]

    def __setitem__(self, c: int, symbol: str) -> None:
        self.materialize(c)
        self.window[c - self.base] = symbol

    def materialize(self, c: int) -> None:
        """Grow the window (at least doubling it) until it covers cell ``c``."""
        lo, hi = self.base, self.hi
        if lo <= c < hi:
            return
        grow = max(len(self.window), 8)
        if c < lo:
            new_lo = min(c, lo - grow)
            self.window[:0] = self.zone.segment(new_lo, lo)
            self.base = new_lo
        else:
            new_hi = max(c + 1, hi + grow)
            self.window.extend(self.zone.segment(hi, new_hi))

    def snapshot(self) -> TapeSnapshot:
        return TapeSnapshot("".join(self.window), self.base, self.zone)

    def copy(self) -> "TmTape":
        other = TmTape.__new__(TmTape)
        other.zone = self.zone
        other.base = self.base
        other.window = list(self.window)
        return other


@dataclass
class TmConfiguration:
    tape: TmTape
    head: int
    state: HeadState = HeadState.NO_CARRY

    def copy(self) -> "TmConfiguration":
        return TmConfiguration(self.tape.copy(), self.head, self.state)


def tm_step(cfg: TmConfiguration, table: TransitionTable = TRANSITIONS) -> TmConfiguration:
    """Return the successor configuration, leaving ``cfg`` untouched."""
    write, move, state = table[cfg.tape[cfg.head], cfg.state]
    tape = cfg.tape.copy()
    tape[cfg.head] = write
    return TmConfiguration(tape, cfg.head + move, state)


def build_theorem_tape(x: str, core: str, y: str) -> TmConfiguration:
    """Seeds and stems of ``x`` and ``y`` around ``core``; head just right of ``core``."""
    left = left_seed_stem(x)
    right = right_seed_stem(y)
    zone = EventualState(left.seed, left.stem, core, right.stem, right.seed)
    return TmConfiguration(TmTape(zone, -len(left.stem), len(core) + len(right.stem)), len(core))


def build_wolfram_tape(core: str) -> TmConfiguration:
    """Underlined zeros to the left, one 0, ``core``, then zeros; head just right of ``core``."""
    zone = EventualState(ZERO_U, ZERO, core, "", ZERO)
    return TmConfiguration(TmTape(zone, -1, len(core)), len(core))


def default_max_steps(left_switches: int, core_length: int) -> int:
    return 64 * (left_switches + core_length + 10) ** 2


@dataclass(frozen=True)
class Switch:
    """The head reversing direction at ``time``; ``tape`` is the tape at that time."""

    side: str
    time: int
    head: int
    tape: TapeSnapshot


def iter_switches(
    cfg: TmConfiguration,
    max_steps: int,
    table: TransitionTable = TRANSITIONS,
    right: bool = False,
) -> Iterator[Switch]:
    """Run a copy of ``cfg`` and yield its left switches (and right switches if asked).

    Raises StepBudgetExceeded once ``max_steps`` steps have been taken.
    """
    tape = cfg.tape.copy()
    window, base = tape.window, tape.base
    h, q = cfg.head, cfg.state
    prev_move = 0
    for t in range(max_steps):
        i = h - base
        if i < 0 or i >= len(window):
            tape.materialize(h)
            window, base = tape.window, tape.base
            i = h - base
        write, move, q_next = table[window[i], q]
        if move < 0 and (prev_move > 0 or t == 0):
            yield Switch("left", t, h, tape.snapshot())
        elif right and move > 0 and prev_move < 0:
            yield Switch("right", t, h, tape.snapshot())
        window[i] = write
        h += move
        q = q_next
        prev_move = move
    raise StepBudgetExceeded(f"step budget of {max_steps} exhausted")


@dataclass(frozen=True)
class EmulationTrace:
    """Tapes at the first few left switches, indexed from 0."""

    snapshots: tuple[TapeSnapshot, ...]
    switch_times: tuple[int, ...]
    heads: tuple[int, ...]
    right_snapshots: tuple[TapeSnapshot, ...] = field(default=())
    right_times: tuple[int, ...] = field(default=())
    right_heads: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.snapshots)

    def cell(self, i: int, c: int) -> str:
        return self.snapshots[i][c]


def run_with_switches(
    cfg: TmConfiguration,
    max_left_switches: int,
    max_steps: int | None = None,
    table: TransitionTable = TRANSITIONS,
    record_right: bool = False,
) -> EmulationTrace:
    if max_steps is None:
        max_steps = default_max_steps(max_left_switches, len(cfg.tape.zone.core))
    left: list[Switch] = []
    right: list[Switch] = []
    if max_left_switches > 0:
        for switch in iter_switches(cfg, max_steps, table, right=record_right):
            if switch.side == "left":
                left.append(switch)
                if len(left) == max_left_switches:
                    break
            else:
                right.append(switch)
    return EmulationTrace(
        tuple(s.tape for s in left),
        tuple(s.time for s in left),
        tuple(s.head for s in left),
        tuple(s.tape for s in right),
        tuple(s.time for s in right),
        tuple(s.head for s in right),
    )


def snapshot_cell(trace: EmulationTrace, i: int, c: int) -> str:
    return trace.cell(i, c)
