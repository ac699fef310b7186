"""Rule 110: the local rule, wrapped runs with period detection, and light-cone runs."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PeriodNotFound
from .words import EventualState

# Outputs for neighbourhoods 000, 001, ..., 111 (read as binary left-centre-right).
RULE_TABLE = (0, 1, 1, 1, 0, 1, 1, 0)

_BY_NEIGHBOURHOOD = {
    f"{k:03b}": str(out) for k, out in enumerate(RULE_TABLE)
}

DEFAULT_MAX_STEPS = 10**6


def local_rule(left: int, center: int, right: int) -> int:
    return RULE_TABLE[(left << 2) | (center << 1) | right]


def local_rule_causal(left: int, center: int, right: int) -> int:
    """The same rule phrased as cell changes.

    A cell flips exactly when a 0 has a 1 to its right (birth) or a 1 has
    1s on both sides (death).
    """
    birth = center == 0 and right == 1
    death = left == center == right == 1
    return 1 - center if birth or death else center


def step_line(cells: str) -> str:
    """One step on a finite segment; the result is two cells shorter."""
    return "".join(
        _BY_NEIGHBOURHOOD[cells[i - 1 : i + 2]] for i in range(1, len(cells) - 1)
    )


def step_wrapped(row: str) -> str:
    """One step on a circular word: the last cell neighbours the first."""
    if not row:
        raise ValueError("wrapped rows must be nonempty")
    return step_line(row[-1] + row + row[0])


@dataclass(frozen=True)
class WrappedRunResult:
    """Rows ``0..beta-1`` of an n-wrapped run, with its onset of periodicity and period.

    ``rows`` is exactly the matrix of the run: row ``alpha + delta`` (not
    stored) equals row ``alpha``.
    """

    n: int
    rows: tuple[str, ...]
    alpha: int
    delta: int

    @property
    def beta(self) -> int:
        return self.alpha + self.delta

    @property
    def matrix(self) -> tuple[str, ...]:
        return self.rows

    def row(self, t: int) -> str:
        """Row at any time ``t``, folding times past the matrix into the periodic band."""
        if t >= self.beta:
            t = self.alpha + (t - self.alpha) % self.delta
        return self.rows[t]


def wrapped_run(initial: str, max_steps: int | None = None) -> WrappedRunResult:
    n = len(initial)
    if n == 0:
        raise ValueError("wrapped runs need a nonempty initial word")
    if max_steps is None:
        max_steps = min(2**n, DEFAULT_MAX_STEPS)
    first_seen = {initial: 0}
    rows = [initial]
    row = initial
    for t in range(1, max_steps + 1):
        row = step_wrapped(row)
        if row in first_seen:
            alpha = first_seen[row]
            return WrappedRunResult(n, tuple(rows), alpha, t - alpha)
        first_seen[row] = t
        rows.append(row)
    raise PeriodNotFound(
        f"no repeated row within {max_steps} steps of {initial!r}"
    )


def causal_future_contains(l: int, t: int, c: int) -> bool:
    """Whether event ``(t, c)`` lies in the causal future of a length-``l`` input."""
    if t < 0:
        raise ValueError("times are nonnegative")
    return -t <= c < l + t


@dataclass(frozen=True)
class LightConeGrid:
    """A finite window of an unbounded run.

    ``rows[t]`` holds cells ``base + t .. right - t - 1`` at time ``t``;
    every value in that range is exact.
    """

    horizon: int
    base: int
    right: int
    rows: tuple[str, ...]

    def valid_range(self, t: int) -> tuple[int, int]:
        return self.base + t, self.right - t

    def __call__(self, t: int, c: int) -> int:
        return int(self.segment(t, c, c + 1))

    def segment(self, t: int, lo: int, hi: int) -> str:
        """Cells ``lo..hi-1`` at time ``t``."""
        if not 0 <= t <= self.horizon:
            raise IndexError(f"time {t} outside 0..{self.horizon}")
        start, stop = self.valid_range(t)
        if lo < start or hi > stop:
            raise IndexError(
                f"cells {lo}..{hi - 1} at time {t} outside exact range {start}..{stop - 1}"
            )
        return self.rows[t][lo - start : hi - start]

    def cone_row(self, t: int, l: int) -> str:
        """Causal future of a length-``l`` input at time ``t``: cells ``-t..l+t-1``."""
        return self.segment(t, -t, l + t)


# Cells kept beyond the strict light cone on each side.
CONE_MARGIN = 2


def future_grid(state: EventualState, horizon: int) -> LightConeGrid:
    """Evolve ``state`` for ``horizon`` steps on a window wide enough for its causal future."""
    if not state.left_seed or not state.right_seed:
        raise ValueError("both seeds must be nonempty for an unbounded run")
    l = len(state.core)
    reach = 2 * horizon + CONE_MARGIN
    base, right = -reach, l + reach
    row = state.segment(base, right)
    rows = [row]
    for _ in range(horizon):
        row = step_line(row)
        rows.append(row)
    return LightConeGrid(horizon, base, right, tuple(rows))
