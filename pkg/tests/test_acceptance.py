"""Acceptance criteria, one test each. Every test records a PASS/FAIL line
that the terminal summary prints (run directly, the lines go to stdout)."""

import random
import time
from itertools import product

import pytest

from conftest import CONE_ROWS, EXAMPLE, MATRIX_000101
from rule110tm.errors import AllZeroRow, PreconditionViolated
from rule110tm.machine import (
    TRANSITIONS,
    HeadState,
    TmConfiguration,
    TmTape,
    build_wolfram_tape,
    run_with_switches,
    tm_step,
)
from rule110tm.rule110 import local_rule, local_rule_causal, step_wrapped, wrapped_run
from rule110tm.verifier import fuzz_verify, verify_emulation, verify_wolfram_limited
from rule110tm.words import TM_ALPHABET, EventualState, reduce
from rule110tm.wrap import left_seed_stem, left_trajectory, right_seed_stem

RESULTS: list[str] = []


def record(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def best_time(fn, repeat=20):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return value, best


def test_criterion_1_seed_stem_reproduction():
    expected = {
        ("left", "111011"): ("", "11i0o0i011"),
        ("right", "1101"): ("ii", "o1"),
        ("left", "000101"): ("1o01o01i01", "i0o0i01111"),
    }
    ok, parts = True, []
    for (side, word), want in expected.items():
        fn = left_seed_stem if side == "left" else right_seed_stem
        s, seconds = best_time(lambda: fn(word))
        good = (s.stem, s.seed) == want and seconds < 1e-3
        ok &= good
        parts.append(f"{side}({word})=({s.stem or 'ε'},{s.seed}) {seconds * 1e6:.0f}us")
    record(1, ok, "; ".join(parts) + " [limit 1 ms each]")


def test_criterion_2_wrapped_run_constants():
    run = wrapped_run("000101")
    traj = left_trajectory(run.matrix, run.alpha, run.delta)
    prefix = ((0, 5), (0, 4), (1, 2), (1, 1), (2, 5), (2, 4), (3, 2))
    ok = (
        (run.alpha, run.delta) == (3, 9)
        and run.matrix == MATRIX_000101
        and traj.points[:7] == prefix
        and (traj.start, traj.period) == (7, 21)
    )
    record(2, ok, f"alpha={run.alpha} delta={run.delta} rows={len(run.matrix)} "
                  f"(a,d)=({traj.start},{traj.period})")


def test_criterion_3_worked_example():
    start = time.perf_counter()
    report = verify_emulation(*EXAMPLE, 12)
    seconds = time.perf_counter() - start
    # Counting oracle: sum over t of the cone width l + 2t.
    oracle = sum(5 + 2 * t for t in range(13))
    ok = (
        report.passed
        and report.checked_events == oracle == 221
        and report.rows == CONE_ROWS
        and seconds < 1.0
    )
    record(3, ok, f"verdict={report.verdict} checked={report.checked_events} "
                  f"oracle={oracle} cone_rows_match={report.rows == CONE_ROWS} {seconds:.3f}s [limit 1 s]")


def test_criterion_4_long_horizon():
    start = time.perf_counter()
    report = verify_emulation(*EXAMPLE, 500)
    seconds = time.perf_counter() - start
    record(4, report.passed and seconds < 30.0,
           f"T=500 verdict={report.verdict} checked={report.checked_events} {seconds:.2f}s [limit 30 s]")


def test_criterion_5_limited_wolfram():
    expected = ["o01110110", "o0110111100", "o011111001000", "o01100010110000"]
    trace = run_with_switches(build_wolfram_tape("111011"), 4)
    raw = [trace.snapshots[i].segment(-i - 2, 6 + i + 1) for i in range(4)]
    report = verify_wolfram_limited("111011", 3)
    ok = raw == expected and report.passed
    record(5, ok, f"M(0..3) raw match={raw == expected} mapped verdict={report.verdict}")


def _laws_hold(rng):
    word = lambda: "".join(rng.choice(TM_ALPHABET) for _ in range(rng.randint(1, 5)))
    zone = EventualState(word(), word(), word(), word(), word())
    tape = TmTape(zone, -3, 6)
    cfg = TmConfiguration(tape, rng.randint(-12, 12), rng.choice(list(HeadState)))
    read = cfg.tape[cfg.head]
    nxt = tm_step(cfg)
    changed = [c for c in range(-20, 20) if cfg.tape[c] != nxt.tape[c]]
    write, move, state = TRANSITIONS[read, cfg.state]
    return (
        changed in ([], [cfg.head])
        and nxt.tape[cfg.head] == write
        and nxt.head - cfg.head == (-1 if read in "01" else 1)
        and (nxt.state is HeadState.CARRY) == (read in "1i")
    )


def _brute_reduce(w):
    for p in range(1, len(w) + 1):
        if len(w) % p == 0 and w[:p] * (len(w) // p) == w:
            return w[:p]
    return w


def _brute_period(w):
    rows = [w]
    while step_wrapped(rows[-1]) not in rows:
        rows.append(step_wrapped(rows[-1]))
    a = rows.index(step_wrapped(rows[-1]))
    return a, len(rows) - a


def test_criterion_6_property_suite():
    rng = random.Random(6)
    start = time.perf_counter()
    checks = {}
    checks["a"] = all(local_rule(*n) == local_rule_causal(*n) for n in product((0, 1), repeat=3))
    words = ["".join(rng.choice("01") for _ in range(rng.randint(1, 12))) for _ in range(500)]
    checks["b"] = all(
        (r.alpha, r.delta) == _brute_period(w) and len(set(r.matrix)) == r.beta
        for w, r in ((w, wrapped_run(w)) for w in words)
    )
    words = ["".join(rng.choice("01") for _ in range(rng.randint(0, 64))) for _ in range(1000)]
    checks["c"] = all(reduce(w) == _brute_reduce(w) for w in words)
    summary = fuzz_verify(count=200, seed=42, horizon=40)
    checks["d"] = summary.passes == 200 == summary.cases
    checks["e"] = all(_laws_hold(rng) for _ in range(10_000))
    seconds = time.perf_counter() - start
    ok = all(checks.values()) and seconds < 60.0
    detail = " ".join(f"({k})={'ok' if v else 'FAILED'}" for k, v in checks.items())
    record(6, ok, f"{detail} fuzz={summary.passes}/{summary.cases} {seconds:.1f}s")


def test_criterion_7_negative_paths():
    raised = []
    for fn in (left_seed_stem, right_seed_stem):
        try:
            fn("11")
        except AllZeroRow:
            raised.append(fn.__name__)
    try:
        verify_emulation("111", "10011", "1101", 5)
    except PreconditionViolated:
        raised.append("verify_emulation")
    ok = raised == ["left_seed_stem", "right_seed_stem", "verify_emulation"]
    record(7, ok, "raised: " + ", ".join(raised))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
