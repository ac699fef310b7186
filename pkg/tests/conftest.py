from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

EXAMPLE = ("111011", "10011", "1101")

# Wrapped run of 000101, rows 0..11.
MATRIX_000101 = (
    "000101", "001111", "011001", "111011", "001110", "011010",
    "111110", "100011", "100110", "101111", "111000", "101001",
)

# Causal future of 10011 on the example backgrounds, cells -t..4+t.
CONE_ROWS = (
    "10011",
    "0101100",
    "111111011",
    "11000011111",
    "0010001100001",
    "001100111000110",
    "10111011010011111",
    "0111011111101100011",
    "011011100001111001101",
    "01111101000110010111110",
    "1110001110011101111000111",
    "110100110101101110010011011",
    "11111011111111110101101111101",
)


def load_interleaved():
    """(kind, head, tape on cells -40..38) for every sweep end of the example run."""
    rows = []
    for line in (GOLDEN / "interleaved_111011_10011_1101.txt").read_text().splitlines():
        kind, head, tape = line.split()
        rows.append((kind, int(head), tape))
    return rows


@pytest.fixture
def interleaved():
    return load_interleaved()


_SESSION_START = []


def pytest_sessionstart(session):
    import time

    _SESSION_START.append(time.perf_counter())


def pytest_terminal_summary(terminalreporter):
    import sys
    import time

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
    if _SESSION_START:
        elapsed = time.perf_counter() - _SESSION_START[0]
        verdict = "PASS" if elapsed < 60 else "FAIL"
        terminalreporter.write_line(f"full suite runtime: {verdict} {elapsed:.1f}s [limit 60 s]")
