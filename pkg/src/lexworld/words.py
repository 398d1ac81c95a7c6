"""Exact binary words and eventually periodic 0/1 sequences.

Finite words are plain Python strings over the alphabet ``{'0', '1'}``.
Infinite sequences are :class:`Seq` objects, i.e. pairs (preperiod, period)
held in a canonical form so that two objects compare equal exactly when they
agree digit by digit.  All numeric values are exact ``fractions.Fraction``.

Digit index 0 carries weight 1/2: a sequence is read as the purely
fractional binary expansion of a number in [0, 1].  The all-ones sequence
reads as the value 1 (the non-terminating expansion); this convention is
relied on throughout and makes ``1`` a legitimate endpoint value.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DomainError, ParseError

# Three-valued result of a lexicographic comparison.
LT, EQ, GT = -1, 0, 1


def check_word(w: str) -> str:
    """Validate that ``w`` is a string over {'0','1'} and return it."""
    for i, c in enumerate(w):
        if c not in "01":
            raise ParseError(f"invalid character {c!r} in binary word", i)
    return w


def minimal_period(w: str) -> int:
    """Smallest ``ell >= 1`` such that w[i] == w[i+ell] whenever both exist.

    Computed as ``len(w)`` minus the length of the longest proper border.
    Any integer >= len(w) counts as a period, so the result is at most
    len(w).  The empty word has no period and is rejected.
    """
    if not w:
        raise DomainError("the empty word has no period")
    border = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = border[k - 1]
        if w[i] == w[k]:
            k += 1
        border[i] = k
    return len(w) - border[-1]


def is_period(w: str, ell: int) -> bool:
    if ell < 1:
        raise DomainError("periods are positive")
    return all(w[i] == w[i + ell] for i in range(len(w) - ell))


def primitive_root(w: str) -> str:
    """The shortest word ``u`` with ``w == u**k``; ``w`` itself if primitive."""
    p = minimal_period(w)
    return w[:p] if len(w) % p == 0 else w


@functools.total_ordering
@dataclass(frozen=True)
class Seq:
    """An eventually periodic binary sequence ``pre . per per per ...``

    Instances are canonical: the period word is primitive and the preperiod
    is as short as possible (its last letter differs from the period's last
    letter, so no rotation of the period can absorb it).  Equality of
    canonical forms is digitwise equality.
    """

    pre: str
    per: str

    def __post_init__(self):
        check_word(self.pre)
        check_word(self.per)
        if not self.per:
            raise DomainError("period must be nonempty")
        pre, per = self.pre, primitive_root(self.per)
        while pre and pre[-1] == per[-1]:
            per = per[-1] + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    # -- digit access ---------------------------------------------------

    def digit(self, n: int) -> str:
        if n < 0:
            raise DomainError("digit index must be nonnegative")
        if n < len(self.pre):
            return self.pre[n]
        return self.per[(n - len(self.pre)) % len(self.per)]

    def prefix(self, n: int) -> str:
        """The first ``n`` digits as a word."""
        if n <= len(self.pre):
            return self.pre[:n]
        reps = (n - len(self.pre)) // len(self.per) + 1
        return (self.pre + self.per * reps)[:n]

    def starts_with(self, w: str) -> bool:
        return self.prefix(len(w)) == w

    # -- structure ------------------------------------------------------

    def shift(self, k: int = 1) -> "Seq":
        """Drop the first ``k`` digits (the k-th iterate of the shift map)."""
        if k < 0:
            raise DomainError("shift distance must be nonnegative")
        if k <= len(self.pre):
            return Seq(self.pre[k:], self.per)
        j = (k - len(self.pre)) % len(self.per)
        return Seq("", self.per[j:] + self.per[:j])

    def prepend(self, letter: str) -> "Seq":
        if letter not in ("0", "1"):
            raise DomainError("letter must be '0' or '1'")
        return Seq(letter + self.pre, self.per)

    def shifts(self) -> list["Seq"]:
        """All distinct shifted sequences, in order of first appearance."""
        out: list[Seq] = []
        seen: set[Seq] = set()
        for k in range(len(self.pre) + len(self.per)):
            s = self.shift(k)
            if s not in seen:
                seen.add(s)
                out.append(s)
        return out

    @property
    def purely_periodic(self) -> bool:
        return not self.pre

    @property
    def is_constant(self) -> bool:
        return not self.pre and len(self.per) == 1

    # -- order and value ------------------------------------------------

    def compare(self, other: "Seq") -> int:
        """Lexicographic comparison; returns LT, EQ or GT.

        Both sequences are purely periodic past the longer preperiod, with
        common period lcm(|per|, |per'|), so scanning that many positions
        decides the order; full agreement there means digitwise equality.
        """
        n = max(len(self.pre), len(other.pre)) + lcm(len(self.per), len(other.per))
        for i in range(n):
            a, b = self.digit(i), other.digit(i)
            if a != b:
                return LT if a < b else GT
        return EQ

    def __lt__(self, other: "Seq") -> bool:
        return self.compare(other) == LT

    def value(self) -> Fraction:
        """The exact number in [0, 1] whose binary digits are this sequence."""
        head = Fraction(int(self.pre, 2) if self.pre else 0, 1 << len(self.pre))
        tail = Fraction(int(self.per, 2), ((1 << len(self.per)) - 1) << len(self.pre))
        return head + tail

    def __str__(self) -> str:
        return f"{self.pre}({self.per})"


ZERO = Seq("", "0")
ONE = Seq("", "1")


def lex_compare(s: Seq, t: Seq) -> int:
    return s.compare(t)


def canonicalize(pre: str, per: str) -> Seq:
    """Build the canonical sequence equal to ``pre . per^oo`` digit by digit."""
    return Seq(pre, per)


def expansion(x: Fraction, greater: bool = False) -> Seq:
    """The binary expansion of ``x`` in [0, 1] as a canonical sequence.

    Dyadic rationals other than 0 and 1 have two expansions; ``greater``
    selects the terminating one (ending 1000...), otherwise the
    lexicographically smaller one (ending 0111...) is returned.  All other
    rationals have a unique expansion and the flag is ignored.
    """
    x = Fraction(x)
    if x < 0 or x > 1:
        raise DomainError(f"expansion requires 0 <= x <= 1, got {x}")
    if x == 0:
        return ZERO
    if x == 1:
        return ONE
    digits: list[str] = []
    pos: dict[Fraction, int] = {}
    y = x
    while y != 0 and y not in pos:
        pos[y] = len(digits)
        y *= 2
        if y >= 1:
            digits.append("1")
            y -= 1
        else:
            digits.append("0")
    body = "".join(digits)
    if y == 0:
        # dyadic: digits end in '1'
        if greater:
            return Seq(body, "0")
        return Seq(body[:-1] + "0", "1")
    i = pos[y]
    return Seq(body[:i], body[i:])


def value(s: Seq) -> Fraction:
    return s.value()


def distinct_shifts(s: Seq) -> list[Seq]:
    return s.shifts()


# -- text grammar -------------------------------------------------------
#
# WORD ::= [01]*          SEQ ::= WORD | WORD "(" WORD ")"
#
# "pre(per)" denotes pre . per^oo; a bare word w is read as w . 0^oo (the
# terminating-expansion convention).  Printing always uses the pre(per)
# spelling of the canonical form.


def parse_word(text: str) -> str:
    return check_word(text)


def parse_seq(text: str) -> Seq:
    open_i = text.find("(")
    if open_i == -1:
        return Seq(check_word(text), "0")
    pre = text[:open_i]
    check_word(pre)
    if not text.endswith(")"):
        raise ParseError("expected ')' to close the period", len(text))
    per = text[open_i + 1:-1]
    if "(" in per or ")" in per:
        raise ParseError("nested parentheses in sequence", open_i + 1 + min(
            i for i, c in enumerate(per) if c in "()"))
    for i, c in enumerate(per):
        if c not in "01":
            raise ParseError(f"invalid character {c!r} in period", open_i + 1 + i)
    if not per:
        raise ParseError("period must be nonempty", open_i + 1)
    return Seq(pre, per)


def parse_rational(text: str) -> Fraction:
    num, slash, den = text.partition("/")
    try:
        n = int(num)
    except ValueError:
        raise ParseError(f"invalid integer {num!r}", 0) from None
    if not slash:
        return Fraction(n)
    try:
        d = int(den)
    except ValueError:
        raise ParseError(f"invalid integer {den!r}", len(num) + 1) from None
    if d <= 0:
        raise ParseError("denominator must be positive", len(num) + 1)
    return Fraction(n, d)
