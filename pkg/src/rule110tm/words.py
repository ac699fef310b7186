"""Finite words and eventually periodic states.

Words are plain immutable ``str`` values. Cellular automaton words use the
alphabet ``"01"``; Turing machine words use the five-character encoding

    ``0``  zero          ``o``  underlined zero
    ``?``  undetermined  ``i``  underlined one
    ``1``  one

so every bit word is also a valid tape word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidSymbol

ZERO = "0"
ZERO_U = "o"
QUERY = "?"
ONE_U = "i"
ONE = "1"

CA_ALPHABET = ZERO + ONE
TM_ALPHABET = ZERO + ZERO_U + QUERY + ONE_U + ONE

_UNDERLINE = {ZERO: ZERO_U, ONE: ONE_U}


def parse_word(text: str, alphabet: str = CA_ALPHABET) -> str:
    """Validate ``text`` against ``alphabet`` and return it unchanged."""
    for position, char in enumerate(text):
        if char not in alphabet:
            raise InvalidSymbol(char, position, alphabet)
    return text


def underline(bit: str) -> str:
    if bit not in _UNDERLINE:
        raise InvalidSymbol(bit, 0, CA_ALPHABET)
    return _UNDERLINE[bit]


def concat(v: str, w: str) -> str:
    return v + w


def reverse(w: str) -> str:
    return w[::-1]


def repeat(w: str, n: int) -> str:
    if n < 0:
        raise ValueError(f"repetition count must be nonnegative, got {n}")
    return w * n


def failure_function(w: str) -> list[int]:
    """Length of the longest proper border of each prefix ``w[:i+1]``."""
    fail = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return fail


def reduce(w: str) -> str:
    """Shortest word ``r`` with ``w == r * n`` for some ``n >= 1``.

    The smallest period of ``w`` is ``len(w) - border`` where ``border`` is
    its longest proper border; ``w`` is a power of its period prefix exactly
    when that period divides ``len(w)``. The empty word reduces to itself.
    """
    if not w:
        return w
    period = len(w) - failure_function(w)[-1]
    if len(w) % period == 0:
        return w[:period]
    return w


def flatten(words: Iterable[str]) -> str:
    return "".join(words)


def split_at(w: Sequence, a: int) -> tuple:
    """Return ``(w[:a], w[a:])``; works for words and words of words alike."""
    if not 0 <= a <= len(w):
        raise IndexError(f"split index {a} outside 0..{len(w)}")
    return w[:a], w[a:]


@dataclass(frozen=True)
class EventualState:
    """An infinite state: a finite core with stems and repeating seeds on both sides.

    The core occupies cells ``0..len(core)-1``. The left stem sits directly
    left of the core and the left seed repeats leftwards beyond it, with the
    seed's last symbol adjacent to the stem. The right stem sits directly
    right of the core and the right seed repeats rightwards beyond it.
    """

    left_seed: str
    left_stem: str
    core: str
    right_stem: str
    right_seed: str

    @classmethod
    def simple(cls, left: str, core: str, right: str) -> "EventualState":
        """The state with ``left`` repeated leftwards and ``right`` rightwards."""
        return cls(left, "", core, "", right)

    def __getitem__(self, c: int) -> str:
        l = len(self.core)
        p = len(self.left_stem)
        q = len(self.right_stem)
        if 0 <= c < l:
            return self.core[c]
        if -p <= c < 0:
            return self.left_stem[c + p]
        if l <= c < l + q:
            return self.right_stem[c - l]
        if c < -p:
            if not self.left_seed:
                raise IndexError(f"cell {c} lies in an empty left seed region")
            # Python's % is floored, so the result is always in 0..len-1.
            return self.left_seed[(c + p) % len(self.left_seed)]
        if not self.right_seed:
            raise IndexError(f"cell {c} lies in an empty right seed region")
        return self.right_seed[(c - l - q) % len(self.right_seed)]

    def segment(self, lo: int, hi: int) -> str:
        """Symbols on cells ``lo..hi-1``."""
        return "".join(self[c] for c in range(lo, hi))
