"""Cross-simulation of Rule 110 and the Turing machine over the causal future of an input."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .errors import AllZeroRow, PreconditionViolated
from .machine import (
    TRANSITIONS,
    TransitionTable,
    build_theorem_tape,
    build_wolfram_tape,
    default_max_steps,
    iter_switches,
)
from .rule110 import future_grid
from .words import ZERO, ZERO_U, EventualState, parse_word
from .wrap import left_seed_stem, right_seed_stem

Mismatch = tuple[int, int, int, str]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing a CA run with a TM emulation.

    ``first_mismatch`` is ``(t, c, ca_bit, tm_symbol)`` for the least failing
    event in (time, cell) order. ``rows`` holds the TM symbols on the compared
    cells of each snapshot that was examined.
    """

    horizon: int
    checked_events: int
    expected_events: int
    first_mismatch: Optional[Mismatch] = None
    rows: tuple[str, ...] = field(default=(), repr=False)

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None and self.checked_events == self.expected_events

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def lines(self) -> list[str]:
        out = [
            f"verdict={self.verdict.upper()}",
            f"horizon={self.horizon}",
            f"checked_events={self.checked_events}",
        ]
        if self.first_mismatch is not None:
            t, c, bit, symbol = self.first_mismatch
            out.append(f"first_mismatch=t={t} c={c} ca={bit} tm={symbol}")
        return out


def causal_future_size(l: int, horizon: int) -> int:
    """Number of events ``(t, c)`` with ``t <= horizon`` and ``-t <= c < l + t``."""
    return (horizon + 1) * l + horizon * (horizon + 1)


def _compare(
    ca_rows, switches, horizon: int, window, normalize=None
) -> VerificationReport:
    """Compare ``ca_rows[t]`` with the TM tape at left switch ``t`` on ``window(t)``."""
    checked = 0
    expected = sum(hi - lo for lo, hi in map(window, range(horizon + 1)))
    rows = []
    for t in range(horizon + 1):
        lo, hi = window(t)
        tm_row = next(switches).tape.segment(lo, hi)
        rows.append(tm_row)
        seen = tm_row if normalize is None else tm_row.translate(normalize)
        ca_row = ca_rows(t, lo, hi)
        if seen == ca_row:
            checked += hi - lo
            continue
        k = next(k for k, (a, b) in enumerate(zip(ca_row, seen)) if a != b)
        checked += k + 1
        mismatch = (t, lo + k, int(ca_row[k]), tm_row[k])
        return VerificationReport(horizon, checked, expected, mismatch, tuple(rows))
    return VerificationReport(horizon, checked, expected, None, tuple(rows))


def verify_emulation(
    x: str,
    core: str,
    y: str,
    horizon: int,
    table: TransitionTable = TRANSITIONS,
    max_steps: int | None = None,
) -> VerificationReport:
    """Check the TM emulation against Rule 110 from ``x`` repeated, ``core``, ``y`` repeated.

    Every event of the causal future of ``core`` up to ``horizon`` is compared
    by strict symbol equality. Comparison stops at the first mismatch.
    """
    for name, word in (("left", x), ("right", y)):
        parse_word(word)
        if ZERO not in word:
            raise PreconditionViolated(f"{name} background word {word!r} must contain a 0")
    parse_word(core)
    l = len(core)
    cfg = build_theorem_tape(x, core, y)
    if max_steps is None:
        max_steps = default_max_steps(horizon + 1, l)
    grid = future_grid(EventualState.simple(x, core, y), horizon)
    return _compare(
        grid.segment,
        iter_switches(cfg, max_steps, table),
        horizon,
        lambda t: (-t, l + t),
    )


_MAP_UNDERLINED_ZERO = str.maketrans({ZERO_U: ZERO})


def verify_wolfram_limited(
    core: str, horizon: int, max_steps: int | None = None
) -> VerificationReport:
    """Check the zero-background emulation, mapping underlined zeros to zeros.

    Snapshot ``t`` is compared on cells ``-t-1 .. l+t``: the causal future
    plus the plain 0 on its left and the head cell on its right.
    """
    parse_word(core)
    l = len(core)
    cfg = build_wolfram_tape(core)
    if max_steps is None:
        max_steps = default_max_steps(horizon + 1, l)
    grid = future_grid(EventualState.simple(ZERO, core, ZERO), horizon + 1)
    return _compare(
        grid.segment,
        iter_switches(cfg, max_steps),
        horizon,
        lambda t: (-t - 1, l + t + 1),
        normalize=_MAP_UNDERLINED_ZERO,
    )


@dataclass(frozen=True)
class FuzzCase:
    index: int
    x: str
    core: str
    y: str


@dataclass(frozen=True)
class FuzzResult:
    case: FuzzCase
    report: VerificationReport


@dataclass(frozen=True)
class FuzzSummary:
    results: tuple[FuzzResult, ...]

    @property
    def cases(self) -> int:
        return len(self.results)

    @property
    def passes(self) -> int:
        return sum(r.report.passed for r in self.results)

    @property
    def failures(self) -> tuple[FuzzResult, ...]:
        return tuple(r for r in self.results if not r.report.passed)


def _random_word(rng: random.Random, length: int) -> str:
    return "".join(rng.choice("01") for _ in range(length))


def _background(rng: random.Random, lengths: tuple[int, int]) -> str:
    # Redraw until the word has a 0 and its wrapped run never hits a zero row.
    while True:
        word = _random_word(rng, rng.randint(*lengths))
        if ZERO not in word:
            continue
        try:
            left_seed_stem(word)
            right_seed_stem(word)
        except AllZeroRow:
            continue
        return word


def fuzz_cases(
    count: int,
    seed: int,
    background_lengths: tuple[int, int] = (2, 8),
    input_lengths: tuple[int, int] = (0, 10),
) -> list[FuzzCase]:
    rng = random.Random(seed)
    cases = []
    for index in range(count):
        x = _background(rng, background_lengths)
        y = _background(rng, background_lengths)
        core = _random_word(rng, rng.randint(*input_lengths))
        cases.append(FuzzCase(index, x, core, y))
    return cases


def _run_case(args: tuple[FuzzCase, int]) -> FuzzResult:
    case, horizon = args
    return FuzzResult(case, verify_emulation(case.x, case.core, case.y, horizon))


def fuzz_verify(
    count: int = 200,
    seed: int = 42,
    horizon: int = 40,
    background_lengths: tuple[int, int] = (2, 8),
    input_lengths: tuple[int, int] = (0, 10),
    workers: int = 1,
) -> FuzzSummary:
    """Verify ``count`` pseudorandom triples; deterministic for a fixed ``seed``."""
    cases = fuzz_cases(count, seed, background_lengths, input_lengths)
    jobs = [(case, horizon) for case in cases]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_case, jobs))
    else:
        results = [_run_case(job) for job in jobs]
    results.sort(key=lambda r: r.case.index)
    return FuzzSummary(tuple(results))
