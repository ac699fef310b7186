"""Rule 110 and the (2,5) Turing machine that emulates it from periodic backgrounds."""

from .errors import (
    AllZeroRow,
    EmulationError,
    InvalidSymbol,
    PeriodNotFound,
    PreconditionViolated,
    StepBudgetExceeded,
)
from .machine import (
    TRANSITIONS,
    HeadState,
    TmConfiguration,
    TmTape,
    build_theorem_tape,
    build_wolfram_tape,
    run_with_switches,
    tm_step,
)
from .rule110 import future_grid, local_rule, step_line, step_wrapped, wrapped_run
from .verifier import (
    VerificationReport,
    causal_future_size,
    fuzz_verify,
    verify_emulation,
    verify_wolfram_limited,
)
from .words import EventualState, parse_word, reduce
from .wrap import left_seed_stem, right_seed_stem

__version__ = "0.1.0"
