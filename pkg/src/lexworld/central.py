"""Balanced words, palindromic closure, and the central-word toolkit.

A word is *central* when it has two coprime periods ell, m with
len + 2 = ell + m.  Central words are exactly the palindromic prefixes of
characteristic sequences, the images of the iterated palindromic closure,
and the words w such that 0w1 and 1w0 are balanced.  This module
recognises them, constructs them from a slope, factorises them, and
recovers their directive words, returning a certificate that carries the
whole structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cf import cf_of_rational, directive_from_cf
from .errors import DomainError, InvariantError
from .words import check_word, is_period, minimal_period


def is_balanced(w: str) -> bool:
    """True when any two equal-length factors differ by at most one '1'.

    Sliding-window scan per factor length with early exit; quadratic in
    len(w), which is ample at the scales this library targets.
    """
    check_word(w)
    n = len(w)
    ones = [0] * (n + 1)
    for i, c in enumerate(w):
        ones[i + 1] = ones[i] + (c == "1")
    for length in range(1, n):
        lo = hi = ones[length]
        for i in range(1, n - length + 1):
            k = ones[i + length] - ones[i]
            if k < lo:
                lo = k
            elif k > hi:
                hi = k
            if hi - lo > 1:
                return False
    return True


def palindromic_closure(w: str) -> str:
    """The shortest palindrome having ``w`` as a prefix.

    Writes w = u v with v the longest palindromic suffix and returns
    u v reverse(u).
    """
    check_word(w)
    for i in range(len(w)):
        suffix = w[i:]
        if suffix == suffix[::-1]:
            return w + w[:i][::-1]
    return w  # only the empty word reaches here


def pal(v: str) -> str:
    """Iterated palindromic closure: pal(wx) = closure(pal(w) + x)."""
    check_word(v)
    w = ""
    for c in v:
        w = palindromic_closure(w + c)
    return w


def _central_periods(w: str) -> tuple[int, int] | None:
    """(ell, m) with ell minimal, ell + m = len + 2, if ``w`` is central.

    The coprime period pair of a central word always contains the minimal
    period, so testing the complement of the minimal period is a complete
    recognition procedure.
    """
    if w == "":
        return (1, 1)
    ell = minimal_period(w)
    m = len(w) + 2 - ell
    if gcd(ell, m) != 1 or not is_period(w, m):
        return None
    return (ell, m)


@dataclass(frozen=True)
class CentralCertificate:
    """A central word with its slope, period pair, factorisation, directive.

    ``word`` is the central word of slope p/q, so len(word) = q - 2 with
    p - 1 ones.  ``ell1`` and ``ell2`` are the coprime periods with
    ell1 + ell2 = q, oriented so that word = w1 01 w2 = w2 10 w1 with
    |w1| = ell1 - 2 and |w2| = ell2 - 2 whenever both letters occur
    (w1 and w2 are None for words in 0* or 1*).  ell2 is the period m
    with m*p = 1 (mod q).  pal(directive) reproduces the word.
    """

    word: str
    p: int
    q: int
    ell1: int
    ell2: int
    w1: str | None
    w2: str | None
    directive: str

    def __post_init__(self):
        w, p, q = self.word, self.p, self.q
        ok = (
            0 < p < q
            and gcd(p, q) == 1
            and len(w) == q - 2
            and w.count("1") == p - 1
            and self.ell1 + self.ell2 == q
            and gcd(self.ell1, self.ell2) == 1
            and self.ell2 * p % q == 1
            and (not w or is_period(w, self.ell1))
            and (not w or is_period(w, self.ell2))
            and (not w or min(self.ell1, self.ell2) == minimal_period(w))
            and pal(self.directive) == w
        )
        if ok and "0" in w and "1" in w:
            w1, w2 = self.w1, self.w2
            ok = (
                w1 is not None
                and w2 is not None
                and len(w1) == self.ell1 - 2
                and len(w2) == self.ell2 - 2
                and w == w1 + "01" + w2 == w2 + "10" + w1
            )
        elif ok:
            ok = self.w1 is None and self.w2 is None
        if not ok:
            raise InvariantError(f"inconsistent central certificate for {w!r}")


def is_central(w: str) -> CentralCertificate | None:
    """Full certificate if ``w`` is central, else None."""
    check_word(w)
    if _central_periods(w) is None:
        return None
    q = len(w) + 2
    p = w.count("1") + 1
    m = pow(p, -1, q)
    ell1, ell2 = q - m, m
    if "0" in w and "1" in w:
        w1, w2 = w[:ell1 - 2], w[ell1:]
        if w[ell1 - 2:ell1] != "01" or w2 + "10" + w1 != w:
            raise InvariantError(f"period orientation broke down on {w!r}")
    else:
        w1 = w2 = None
    return CentralCertificate(w, p, q, ell1, ell2, w1, w2, _directive(w))


def _directive(w: str) -> str:
    # Central prefixes of a central word form a chain; the directive letter
    # of each step is the letter following the previous central prefix.
    out = []
    prev = 0
    for length in range(1, len(w) + 1):
        if _central_periods(w[:length]) is not None:
            out.append(w[prev])
            prev = length
    if prev != len(w):
        raise DomainError(f"{w!r} is not central")
    return "".join(out)


def directive_of_central(w: str) -> str:
    """The unique v with pal(v) == w; rejects non-central words."""
    check_word(w)
    if _central_periods(w) is None:
        raise DomainError(f"{w!r} is not central")
    v = _directive(w)
    if pal(v) != w:
        raise InvariantError(f"directive recovery failed on {w!r}")
    return v


def standard_factorization(cert: CentralCertificate) -> tuple[str, str]:
    """The unique (w1, w2) with word = w1 01 w2 = w2 10 w1."""
    if cert.w1 is None or cert.w2 is None:
        raise DomainError("words in 0* or 1* have no standard factorization")
    return cert.w1, cert.w2


def extremal_rotations(w: str) -> tuple[str, str]:
    """(least, greatest) circular shift of a nonempty word."""
    check_word(w)
    if not w:
        raise DomainError("the empty word has no rotations")
    rots = [w[i:] + w[:i] for i in range(len(w))]
    return min(rots), max(rots)


def pal_extension(cert: CentralCertificate, x: str) -> str:
    """pal(directive + x) computed from the standard factorisation.

    Extending by 0 gives w2 10 w1 01 w2 and extending by 1 gives
    w1 01 w2 10 w1; both are cross-checked against the closure route.
    """
    if x not in ("0", "1"):
        raise DomainError("extension letter must be '0' or '1'")
    w1, w2 = standard_factorization(cert)
    if x == "0":
        out = w2 + "10" + w1 + "01" + w2
    else:
        out = w1 + "01" + w2 + "10" + w1
    if out != palindromic_closure(cert.word + x):
        raise InvariantError("factorised closure disagrees with direct closure")
    return out


def central_from_slope(p: int, q: int) -> CentralCertificate:
    """The central word of slope p/q, built three independent ways.

    (a) digits of the zero-intercept mechanical sequence with its bounding
    letters stripped, (b) the palindromic closure of the directive word of
    the continued fraction, (c) reconstruction from the coprime period pair
    (q - m, m) with m*p = 1 (mod q).  All three must agree.
    """
    if not (0 < p < q) or gcd(p, q) != 1:
        raise DomainError(f"need coprime 0 < p < q, got {p}/{q}")
    # (a) floor-difference digits of slope p/q, intercept 0
    digits = "".join(str((n + 1) * p // q - n * p // q) for n in range(q))
    if digits[0] != "0" or digits[-1] != "1":
        raise InvariantError("mechanical period must start 0 and end 1")
    w_mech = digits[1:-1]
    # (b) palindromic closure of the directive word
    w_pal = pal(directive_from_cf(cf_of_rational(p, q)))
    # (c) coprime-period reconstruction
    w_per = _word_from_periods(p, q)
    if not (w_mech == w_pal == w_per):
        raise InvariantError(
            f"slope {p}/{q}: routes disagree ({w_mech!r}, {w_pal!r}, {w_per!r})")
    cert = is_central(w_mech)
    if cert is None or (cert.p, cert.q) != (p, q):
        raise InvariantError(f"slope {p}/{q}: constructed word failed recognition")
    return cert


def _word_from_periods(p: int, q: int) -> str:
    # Positions forced equal modulo each period collapse into at most two
    # classes; the class of size p - 1 carries the ones.
    n = q - 2
    if n == 0:
        return ""
    m = pow(p, -1, q)
    ell = q - m
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for step in (ell, m):
        for i in range(n - step):
            a, b = find(i), find(i + step)
            if a != b:
                parent[a] = b
    classes: dict[int, list[int]] = {}
    for i in range(n):
        classes.setdefault(find(i), []).append(i)
    if len(classes) == 1:
        if p == 1:
            return "0" * n
        if p == q - 1:
            return "1" * n
        raise InvariantError(f"slope {p}/{q}: single class but nonconstant word")
    if len(classes) != 2:
        raise InvariantError(f"slope {p}/{q}: {len(classes)} congruence classes")
    sizes = {root: len(members) for root, members in classes.items()}
    ones_root = [r for r, s in sizes.items() if s == p - 1]
    if len(ones_root) != 1:
        raise InvariantError(f"slope {p}/{q}: ambiguous ones class")
    letters = ["0"] * n
    for i in classes[ones_root[0]]:
        letters[i] = "1"
    return "".join(letters)
