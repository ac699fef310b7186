"""Left and right wrap constructions: seeds and stems from wrapped-run matrices.

A cursor walks the matrix of a wrapped run. Reading a 1 it moves one cell
sideways. Reading a 0 it moves one row down and sideways past the 0 and its
neighbour: on the left that is always two cells; on the right the cursor
first skips any further 0s, so the neighbour it passes is the nearest 1.
Moving down from the last row re-enters the periodic band at ``alpha``.
The walk eventually revisits a cell; the symbols read before the cycle
give the stem and the cycle gives the seed.

``right_variant="paired"`` keeps the right walk at exactly two cells per 0.
That variant is wrong whenever a 0 has a 0 to its right followed by a 1;
the machine then miscomputes the cell it turns on. It is kept for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .errors import AllZeroRow
from .rule110 import wrapped_run
from .words import ONE, ONE_U, ZERO, ZERO_U, flatten, reduce, reverse, split_at, underline

Side = Literal["left", "right"]
Point = tuple[int, int]


@dataclass(frozen=True)
class Trajectory:
    """Points ``0..b-1`` of a wrap trajectory, where ``b = start + period``.

    Point ``b`` (not stored) equals point ``start``, and no earlier index
    recurs.
    """

    points: tuple[Point, ...]
    start: int
    period: int
    side: Side

    @property
    def first_recurrence(self) -> int:
        return self.start + self.period

    def point(self, i: int) -> Point:
        """Point at any index, folding past ``b`` into the cycle."""
        if i >= len(self.points):
            i = self.start + (i - self.start) % self.period
        return self.points[i]


@dataclass(frozen=True)
class SeedStem:
    seed: str
    stem: str
    side: Side


def check_no_zero_row(matrix: Sequence[str]) -> None:
    for t, row in enumerate(matrix):
        if ONE not in row:
            raise AllZeroRow(f"row {t} of the wrapped-run matrix is all zeros: {row}")


def next_row(t: int, alpha: int, delta: int) -> int:
    """The row below ``t``; the row below the last one is ``alpha``.

    Agrees with ``alpha + (t - alpha + 1) % delta`` for ``t >= alpha - 1``.
    Rows above ``alpha - 1`` simply step down, since the pre-periodic rows
    are visited once on the way into the band.
    """
    return t + 1 if t + 1 < alpha + delta else alpha


def zero_run(row: str, c: int) -> int:
    """Number of 0s immediately right of cell ``c``, wrapping around the row."""
    n = len(row)
    k = 0
    while row[(c + 1 + k) % n] == ZERO:
        k += 1
    return k


def walk(
    matrix: Sequence[str], alpha: int, delta: int, side: Side, right_variant: str = "scan"
) -> Iterator[Point]:
    """Yield the (infinite) wrap trajectory of ``matrix``."""
    n = len(matrix[0])
    sign = -1 if side == "left" else 1
    scan = side == "right" and right_variant == "scan"
    t, c = (0, n - 1) if side == "left" else (0, 0)
    while True:
        yield t, c
        row = matrix[t]
        if row[c] == ONE:
            c = (c + sign) % n
        else:
            skip = zero_run(row, c) if scan else 0
            t = next_row(t, alpha, delta)
            c = (c + (2 + skip) * sign) % n


def _trajectory(
    matrix: Sequence[str], alpha: int, delta: int, side: Side, right_variant: str = "scan"
) -> Trajectory:
    check_no_zero_row(matrix)
    first_visit: dict[Point, int] = {}
    points = []
    for i, p in enumerate(walk(matrix, alpha, delta, side, right_variant)):
        if p in first_visit:
            a = first_visit[p]
            return Trajectory(tuple(points), a, i - a, side)
        first_visit[p] = i
        points.append(p)
    raise AssertionError("unreachable")


def left_trajectory(matrix: Sequence[str], alpha: int, delta: int) -> Trajectory:
    return _trajectory(matrix, alpha, delta, "left")


def right_trajectory(
    matrix: Sequence[str], alpha: int, delta: int, variant: str = "scan"
) -> Trajectory:
    if variant not in ("scan", "paired"):
        raise ValueError(f"unknown right wrap variant {variant!r}")
    return _trajectory(matrix, alpha, delta, "right", variant)


def trajectory_symbols(matrix: Sequence[str], traj: Trajectory, count: int | None = None) -> str:
    """Symbols read along the trajectory, for ``count`` points (default ``b``)."""
    if count is None:
        count = traj.first_recurrence
    return "".join(matrix[t][c] for t, c in (traj.point(i) for i in range(count)))


def trajectory_neighbours(matrix: Sequence[str], traj: Trajectory, count: int | None = None) -> str:
    """Symbols of the wrapped neighbour on the trajectory's direction of travel."""
    if count is None:
        count = traj.first_recurrence
    n = len(matrix[0])
    step = -1 if traj.side == "left" else 1
    return "".join(
        matrix[t][(c + step) % n] for t, c in (traj.point(i) for i in range(count))
    )


def build_left_U(matrix: Sequence[str], traj: Trajectory, count: int | None = None) -> tuple[str, ...]:
    symbols = trajectory_symbols(matrix, traj, count)
    neighbours = trajectory_neighbours(matrix, traj, count)
    return tuple(
        ONE if s == ONE else ZERO + underline(nb) for s, nb in zip(symbols, neighbours)
    )


def build_right_U(
    matrix: Sequence[str], traj: Trajectory, count: int | None = None, variant: str = "scan"
) -> tuple[str, ...]:
    """Entries ``i`` for a 1; for a 0, ``o`` then the cells the cursor skips.

    In the scan variant a 0 contributes one ``o`` per 0 up to the nearest 1
    on its right, then that ``1``. In the paired variant it contributes ``o``
    and its right neighbour.
    """
    if count is None:
        count = traj.first_recurrence
    entries = []
    for t, c in (traj.point(i) for i in range(count)):
        row = matrix[t]
        if row[c] == ONE:
            entries.append(ONE_U)
        elif variant == "scan":
            entries.append(ZERO_U * (zero_run(row, c) + 1) + ONE)
        else:
            entries.append(ZERO_U + row[(c + 1) % len(row)])
    return tuple(entries)


def left_seed_stem(x: str) -> SeedStem:
    run = wrapped_run(x)
    traj = left_trajectory(run.matrix, run.alpha, run.delta)
    before, cycle = split_at(build_left_U(run.matrix, traj), traj.start)
    return SeedStem(
        seed=reduce(reverse(flatten(cycle))),
        stem=reverse(flatten(before)),
        side="left",
    )


def right_seed_stem(y: str, variant: str = "scan") -> SeedStem:
    run = wrapped_run(y)
    traj = right_trajectory(run.matrix, run.alpha, run.delta, variant)
    before, cycle = split_at(build_right_U(run.matrix, traj, variant=variant), traj.start)
    return SeedStem(seed=reduce(flatten(cycle)), stem=flatten(before), side="right")
