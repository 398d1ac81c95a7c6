"""Mechanical sequences with exact rational slope and intercept.

The lower (floor) and upper (ceiling) digit formulas are evaluated in
exact arithmetic; rational slopes give purely periodic sequences and the
characteristic ones tie back to central words and directive words.
Irrational slopes are never materialised: they enter only through
directive sequences, whose block lengths encode the continued fraction.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, gcd

from .cf import ContinuedFraction, cf_of_rational, directive_from_cf
from .central import central_from_slope, palindromic_closure
from .errors import DomainError, InvariantError
from .words import Seq

__all__ = [
    "ContinuedFraction", "cf_of_rational", "directive_from_cf",
    "mech_lower", "mech_upper", "mech_periodic", "characteristic_pair",
    "characteristic_periodic_via_pal", "characteristic_sturmian_prefix",
    "is_sturmian_directive", "pal_prefix",
]


def _check_params(alpha: Fraction, rho: Fraction, n: int) -> None:
    if not 0 <= alpha <= 1:
        raise DomainError(f"slope must lie in [0, 1], got {alpha}")
    if not 0 <= rho <= 1:
        raise DomainError(f"intercept must lie in [0, 1], got {rho}")
    if n < 0:
        raise DomainError("index must be nonnegative")


def mech_lower(alpha: Fraction, rho: Fraction, n: int) -> int:
    """floor((n+1) alpha + rho) - floor(n alpha + rho)."""
    _check_params(alpha, rho, n)
    return floor((n + 1) * alpha + rho) - floor(n * alpha + rho)


def mech_upper(alpha: Fraction, rho: Fraction, n: int) -> int:
    """ceil((n+1) alpha + rho) - ceil(n alpha + rho)."""
    _check_params(alpha, rho, n)
    return ceil((n + 1) * alpha + rho) - ceil(n * alpha + rho)


def mech_periodic(p: int, q: int, rho: Fraction = Fraction(0),
                  upper: bool = False) -> Seq:
    """The full mechanical sequence of slope p/q as a periodic object.

    Advancing n by q adds the integer p inside both floor (or ceiling)
    terms, so q is always a period; canonicalisation then exposes the
    minimal one.
    """
    if q < 1 or not 0 <= p <= q:
        raise DomainError(f"need 0 <= p <= q with q >= 1, got {p}/{q}")
    if gcd(p, q) != 1:
        raise DomainError(f"p={p} and q={q} are not coprime")
    alpha = Fraction(p, q)
    digit = mech_upper if upper else mech_lower
    word = "".join(str(digit(alpha, Fraction(rho), n)) for n in range(q))
    return Seq("", word)


def characteristic_pair(p: int, q: int) -> tuple[Seq, Seq]:
    """((w10)^oo, (w01)^oo) for the central word w of slope p/q.

    These are the two sequences of slope p/q whose intercept equals the
    slope; they are shifts of the zero-intercept sequences and of each
    other.
    """
    w = central_from_slope(p, q).word
    return Seq("", w + "10"), Seq("", w + "01")


def pal_prefix(delta: Seq, min_len: int) -> str:
    """A prefix of the iterated palindromic closure of the digits of ``delta``
    with length at least ``min_len``."""
    w = ""
    k = 0
    while len(w) < min_len:
        w = palindromic_closure(w + delta.digit(k))
        k += 1
    return w


def is_sturmian_directive(delta: Seq) -> bool:
    """Directives that are not eventually constant drive aperiodic limits."""
    return delta.per not in ("0", "1")


def characteristic_sturmian_prefix(delta: Seq, n: int) -> str:
    """First ``n`` letters of the closure limit of a non-constant directive."""
    if n < 1:
        raise DomainError("prefix length must be positive")
    if not is_sturmian_directive(delta):
        raise DomainError(
            "directive is eventually constant; its limit is periodic, "
            "use the slope-based constructors instead")
    return pal_prefix(delta, n)[:n]


def characteristic_periodic_via_pal(p: int, q: int, variant: str = "xy") -> Seq:
    """Intercept-equals-slope sequence of slope p/q via palindromic closure.

    With directive blocks d1..dn and x the letter of the n-th block, the
    closure of 0^d1 1^d2 ... x^(dn+1) y^oo is (w x y)^oo and the closure of
    0^d1 1^d2 ... x^dn y x^oo is (w y x)^oo.  ``variant`` picks "xy" or
    "yx".  The result is checked against the central-word construction.
    """
    if variant not in ("xy", "yx"):
        raise DomainError("variant must be 'xy' or 'yx'")
    cf = cf_of_rational(p, q)
    blocks = cf.directive_blocks()
    x = "0" if len(blocks) % 2 == 1 else "1"
    y = "1" if x == "0" else "0"
    head = directive_from_cf(cf) + (x if variant == "xy" else y)
    tail = y if variant == "xy" else x

    w = ""
    k = 0
    while len(w) < 2 * q + 2:
        c = head[k] if k < len(head) else tail
        w = palindromic_closure(w + c)
        k += 1
    result = Seq("", w[:q])
    if not result.starts_with(w):
        raise InvariantError(f"slope {p}/{q}: closure prefix is not periodic")
    ten_seq, oh_one_seq = characteristic_pair(p, q)
    last_two = x + y if variant == "xy" else y + x
    expected = ten_seq if last_two == "10" else oh_one_seq
    if result != expected:
        raise InvariantError(f"slope {p}/{q}: closure route disagrees")
    return result
