"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 domain error
(e.g. a zero row in a wrapped run, step budget exhausted), 64 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import EmulationError, InvalidSymbol, StepBudgetExceeded
from .machine import build_theorem_tape, build_wolfram_tape, run_with_switches
from .render import (
    CA_GLYPHS,
    MODES,
    TM_GLYPHS,
    RenderStyle,
    render_spacetime,
    select_tape_rows,
    tape_diagram,
)
from .rule110 import future_grid, wrapped_run
from .verifier import fuzz_verify, verify_emulation, verify_wolfram_limited
from .words import CA_ALPHABET, EventualState, parse_word
from .wrap import left_seed_stem, right_seed_stem

EX_OK, EX_FAIL, EX_DOMAIN, EX_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _word(args, name: str, flag: str) -> str:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"{flag} is required")
    try:
        return parse_word(value, CA_ALPHABET)
    except InvalidSymbol as exc:
        raise UsageError(f"{flag}: {exc}") from None


def cmd_seeds(args) -> int:
    if args.left is None and args.right is None:
        raise UsageError("give --left and/or --right")
    if args.left is not None:
        left = left_seed_stem(_word(args, "left", "--left"))
        print(f"left_stem={left.stem}")
        print(f"left_seed={left.seed}")
    if args.right is not None:
        right = right_seed_stem(_word(args, "right", "--right"), args.right_variant)
        print(f"right_stem={right.stem}")
        print(f"right_seed={right.seed}")
    return EX_OK


def cmd_run_ca(args) -> int:
    x, core, y = (_word(args, n, f"--{f}") for n, f in (("left", "left"), ("input", "input"), ("right", "right")))
    horizon = args.steps
    if args.margin < 0:
        raise UsageError("--margin must be nonnegative")
    # A deeper grid keeps the margin cells exact.
    grid = future_grid(EventualState.simple(x, core, y), horizon + args.margin)
    l = len(core)
    lo, hi = -horizon - args.margin, l + horizon + args.margin
    rows = [grid.segment(t, lo, hi) for t in range(horizon + 1)]
    spans = [(-t - lo, l + t - lo) for t in range(horizon + 1)]
    glyphs = CA_GLYPHS if args.glyphs else {"0": "0", "1": "1"}
    style = RenderStyle(glyphs=glyphs, emphasis=args.emphasis)
    sys.stdout.write(render_spacetime(rows, style, spans))
    return EX_OK


def cmd_run_wrapped(args) -> int:
    word = _word(args, "word", "--word")
    run = wrapped_run(word, args.max_steps)
    if args.show_alpha_delta:
        print(f"alpha={run.alpha} delta={run.delta} beta={run.beta}")
    glyphs = CA_GLYPHS if args.glyphs else {"0": "0", "1": "1"}
    sys.stdout.write(render_spacetime(run.matrix, RenderStyle(glyphs=glyphs)))
    return EX_OK


def _tm_config(args):
    core = _word(args, "input", "--input")
    if args.wolfram:
        return build_wolfram_tape(core), core
    x = _word(args, "left", "--left")
    y = _word(args, "right", "--right")
    return build_theorem_tape(x, core, y), core


def _tm_diagram(cfg, core, switches, mode, emphasis, max_steps) -> str:
    rows = select_tape_rows(cfg, switches, mode, max_steps)
    if not rows:
        return ""
    lo = min(min(r.head for r in rows), -switches) - 2
    hi = max(max(r.head for r in rows), len(core) + switches) + 3
    style = RenderStyle(glyphs=TM_GLYPHS, emphasis=emphasis, mode=mode)
    return tape_diagram(rows, len(core), lo, hi, style)


def cmd_run_tm(args) -> int:
    cfg, core = _tm_config(args)
    if args.render == "ascii":
        sys.stdout.write(
            _tm_diagram(cfg, core, args.switches, args.mode, args.emphasis, args.max_steps)
        )
        return EX_OK
    trace = run_with_switches(cfg, args.switches, args.max_steps)
    print(f"left_switches={len(trace)}")
    print("switch_times=" + ",".join(map(str, trace.switch_times)))
    print("heads=" + ",".join(map(str, trace.heads)))
    return EX_OK


def cmd_render(args) -> int:
    if args.what == "ca":
        args.steps, args.glyphs = args.horizon, True
        if args.wolfram:
            args.left = args.right = "0"
        return cmd_run_ca(args)
    cfg, core = _tm_config(args)
    sys.stdout.write(
        _tm_diagram(cfg, core, args.horizon + 1, args.mode, args.emphasis, args.max_steps)
    )
    return EX_OK


def cmd_verify(args) -> int:
    core = _word(args, "input", "--input")
    if args.wolfram:
        report = verify_wolfram_limited(core, args.horizon, args.max_steps)
    else:
        x = _word(args, "left", "--left")
        y = _word(args, "right", "--right")
        report = verify_emulation(x, core, y, args.horizon, max_steps=args.max_steps)
    print("\n".join(report.lines()))
    return EX_OK if report.passed else EX_FAIL


def cmd_fuzz(args) -> int:
    summary = fuzz_verify(
        count=args.count,
        seed=args.seed,
        horizon=args.horizon,
        background_lengths=(args.min_background, args.max_background),
        input_lengths=(args.min_input, args.max_input),
        workers=args.workers,
    )
    print(f"cases={summary.cases}")
    print(f"passes={summary.passes}")
    print(f"failures={len(summary.failures)}")
    for result in summary.failures:
        c = result.case
        print(f"FAIL case={c.index} left={c.x} input={c.core} right={c.y} " + " ".join(result.report.lines()[2:]))
    return EX_OK if not summary.failures else EX_FAIL


def _add_triple(p, required_input=True):
    p.add_argument("--left", metavar="X", help="left background word (repeated leftwards)")
    p.add_argument("--input", metavar="I", default=None if required_input else "", help="input word I")
    p.add_argument("--right", metavar="Y", help="right background word (repeated rightwards)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rule110tm", description="Rule 110 / (2,5) Turing machine emulation tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("seeds", help="print seeds and stems of background words")
    p.add_argument("--left", metavar="X")
    p.add_argument("--right", metavar="Y")
    p.add_argument("--right-variant", choices=("scan", "paired"), default="scan",
                   help="right wrap walk (paired is the unreliable two-cell form)")
    p.set_defaults(func=cmd_seeds)

    p = sub.add_parser("run-ca", help="print a Rule 110 run on its causal-future window")
    _add_triple(p, required_input=False)
    p.add_argument("--steps", type=int, default=12)
    p.add_argument("--margin", type=int, default=0, help="extra cells each side of the cone")
    p.add_argument("--glyphs", action="store_true", help="draw 0/1 as ./#")
    p.add_argument("--emphasis", action="store_true", help="bracket the causal future")
    p.set_defaults(func=cmd_run_ca)

    p = sub.add_parser("run-wrapped", help="print the matrix of a wrapped run")
    p.add_argument("--word", required=True)
    p.add_argument("--show-alpha-delta", action="store_true")
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--glyphs", action="store_true")
    p.set_defaults(func=cmd_run_wrapped)

    p = sub.add_parser("run-tm", help="run the Turing machine to a number of left switches")
    _add_triple(p, required_input=False)
    p.add_argument("--wolfram", action="store_true", help="use the all-zero background tape")
    p.add_argument("--switches", type=int, default=13)
    p.add_argument("--render", choices=("none", "ascii"), default="none")
    p.add_argument("--mode", choices=MODES, default="left")
    p.add_argument("--emphasis", action="store_true")
    p.add_argument("--max-steps", type=int, default=None)
    p.set_defaults(func=cmd_run_tm)

    p = sub.add_parser("verify", help="check the emulation over the causal future")
    _add_triple(p, required_input=False)
    p.add_argument("--horizon", type=int, default=12)
    p.add_argument("--wolfram", action="store_true")
    p.add_argument("--max-steps", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="verify many random triples")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--horizon", type=int, default=40)
    p.add_argument("--min-background", type=int, default=2)
    p.add_argument("--max-background", type=int, default=8)
    p.add_argument("--min-input", type=int, default=0)
    p.add_argument("--max-input", type=int, default=10)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("render", help="draw a spacetime diagram")
    _add_triple(p, required_input=False)
    p.add_argument("--what", choices=("ca", "tm"), default="tm")
    p.add_argument("--horizon", type=int, default=12)
    p.add_argument("--mode", choices=MODES, default="left")
    p.add_argument("--emphasis", action="store_true")
    p.add_argument("--wolfram", action="store_true")
    p.add_argument("--margin", type=int, default=0)
    p.add_argument("--max-steps", type=int, default=None)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except StepBudgetExceeded as exc:
        print(f"{parser.prog}: step budget exceeded: {exc}", file=sys.stderr)
        return EX_DOMAIN
    except EmulationError as exc:
        print(f"{parser.prog}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EX_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
