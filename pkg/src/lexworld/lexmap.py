"""The least admissible upper bound phi and the interval endpoint F.

For binary sequences x and y, the constraint family Sigma(x, y) collects
the sequences all of whose shifts lie between x and y lexicographically.
phi(x) is the least y making the family nonempty.  Writing x = 0u, the
answer is always the constant u, the one-prefixed copy of a characteristic
aperiodic u, or a periodic sequence (1w0)^oo for a central word w pinned
down by u; F transports the same computation to rationals through exact
binary expansions, yielding the least right endpoint y such that every
fractional part of ksi * 2^n can be trapped in [x, y] for some ksi > 0.

Every result returned here is verified before it leaves: the defining
shift inequalities are re-checked over the finite shift set, and in the
central-word cases the sandwich (w01)^oo <= u <= (w10)^oo is confirmed
exactly.  Failures raise InvariantError rather than returning a guess.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .central import (CentralCertificate, central_from_slope, is_balanced,
                      is_central, palindromic_closure, _central_periods)
from .errors import DomainError, InvariantError
from .mechanical import characteristic_sturmian_prefix, is_sturmian_directive
from .words import EQ, GT, LT, ONE, ZERO, Seq, check_word, expansion


class Case(str, enum.Enum):
    """Which branch of the phi case analysis produced a result.

    "i" and "ii" cover the constant bounds and the all-ones/all-zeros
    longest central prefixes; "iv" the characteristic periodic inputs;
    "v_a", "v_b", "v_c" the three generic subcases decided by the letters
    following the longest central prefix.
    """

    I = "i"
    II = "ii"
    III_STURMIAN = "iii_sturmian"
    IV = "iv"
    V_A = "v_a"
    V_B = "v_b"
    V_C = "v_c"
    BOUNDARY_X_GT_HALF = "boundary_x_gt_half"
    BOUNDARY_X_ZERO = "boundary_x_zero"

    def __str__(self) -> str:
        return self.value


KIND_ALL_ZERO = "all_zero"
KIND_ALL_ONE = "all_one"
KIND_CPB = "characteristic_periodic_balanced"
KIND_GENERIC = "generic"


@dataclass(frozen=True)
class Classification:
    kind: str
    p: int | None = None
    q: int | None = None
    variant: str | None = None  # "ends01" | "ends10"


def classify(u: Seq) -> Classification:
    """Sort ``u`` into constant, characteristic periodic, or generic.

    A purely periodic u whose primitive period drops its last two letters
    ("01" or "10") to a central word is characteristic of slope
    (ones-per-period) / (period length); everything else eventually
    periodic is generic.
    """
    if u == ZERO:
        return Classification(KIND_ALL_ZERO)
    if u == ONE:
        return Classification(KIND_ALL_ONE)
    if u.purely_periodic and len(u.per) >= 2:
        c = u.per
        tail = c[-2:]
        if tail in ("01", "10") and _central_periods(c[:-2]) is not None:
            p, q = c.count("1"), len(c)
            if gcd(p, q) != 1:
                raise InvariantError(f"period {c!r}: slope {p}/{q} not reduced")
            variant = "ends01" if tail == "01" else "ends10"
            return Classification(KIND_CPB, p, q, variant)
    return Classification(KIND_GENERIC)


@dataclass(frozen=True)
class PhiResult:
    """phi value plus the evidence used to produce and verify it."""

    phi: Seq
    case: Case
    central: CentralCertificate | None
    longest_central_prefix: str | None
    trace: tuple[str, ...]


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    checks: int
    failures: tuple[str, ...] = ()


def verify_phi(u: Seq, b: Seq) -> VerifyReport:
    """Check the defining inequalities of b = phi(0u) over b's shift set.

    Requires 0u <= T^k(b) <= 1u and T^k(b) <= b for every distinct shift,
    plus balance of b, decided on its doubled period (a window of twice
    the period length sees every factor length that matters).
    """
    failures: list[str] = []
    zero_u, one_u = u.prepend("0"), u.prepend("1")
    shifts = b.shifts()
    checks = 0
    for t in shifts:
        checks += 3
        if not zero_u <= t:
            failures.append(f"shift {t} is below the lower bound 0u = {zero_u}")
        if not t <= one_u:
            failures.append(f"shift {t} is above the upper bound 1u = {one_u}")
        if not t <= b:
            failures.append(f"shift {t} exceeds the sequence itself")
    checks += 1
    if not is_balanced(b.pre + b.per * 2):
        failures.append("sequence is not balanced on its doubled period")
    return VerifyReport(not failures, checks, tuple(failures))


def sigma_member(s: Seq, lo: Seq, hi: Seq) -> bool:
    """Do all shifts of ``s`` lie in [lo, hi] lexicographically?"""
    return all(lo <= t <= hi for t in s.shifts())


def lex_world_member(x: Seq, y: Seq) -> bool:
    """Is Sigma(x, y) nonempty?  Equivalent to y >= phi(x)."""
    return y >= phi(x).phi


def _must_verify(u: Seq, b: Seq, trace: list[str]) -> None:
    report = verify_phi(u, b)
    if not report.passed:
        raise InvariantError(
            f"phi(0.{u}) = {b} failed verification: {report.failures[0]}")
    trace.append(f"verified {report.checks} shift and balance checks")


def _longest_central_prefix(u: Seq, trace: list[str]) -> tuple[str, str]:
    """The longest central prefix of ``u`` and its directive word.

    Central prefixes form a single closure chain, each step extending the
    directive by the letter of ``u`` right after the previous prefix, so
    the first failed extension witnesses maximality.  Only reached for
    generic ``u``, where the chain is finite.
    """
    cap = 64 * (len(u.pre) + len(u.per)) + 64
    v, dirv = "", ""
    while True:
        c = u.digit(len(v))
        nxt = palindromic_closure(v + c)
        if not u.starts_with(nxt):
            trace.append(
                f"longest central prefix {v!r} (extension by {c!r} fails)")
            return v, dirv
        v, dirv = nxt, dirv + c
        if len(v) > cap:
            raise InvariantError(
                f"central prefixes of {u} exceed the safety cap {cap}; "
                "the input should have been classified as characteristic")


def phi_zero_u(u: Seq) -> PhiResult:
    """phi(0u) for an eventually periodic ``u``, with mandatory verification.

    Constants map to themselves; characteristic periodic u of slope p/q
    map to (1 w 0)^oo for the central word w of that slope.  Otherwise the
    longest central prefix v decides: an all-ones v gives (v0)^oo, an
    all-zeros v gives (1v)^oo, and a two-letter v is resolved by the next
    two letters x, y of u and, when x != y, by comparing the following
    |v| + 2 letters z against vxy.  The final sandwich
    (w01)^oo <= u <= (w10)^oo and the shift inequalities are re-checked
    exactly before returning.
    """
    trace: list[str] = []
    cls = classify(u)

    if cls.kind in (KIND_ALL_ZERO, KIND_ALL_ONE):
        trace.append(f"constant input: phi(0.{u}) = {u}")
        _must_verify(u, u, trace)
        return PhiResult(u, Case.II, None, None, tuple(trace))

    if cls.kind == KIND_CPB:
        cert = central_from_slope(cls.p, cls.q)
        b = Seq("", "1" + cert.word + "0")
        trace.append(
            f"characteristic periodic input of slope {cls.p}/{cls.q} "
            f"({cls.variant}); phi = (1{cert.word}0)^oo")
        lo, hi = Seq("", cert.word + "01"), Seq("", cert.word + "10")
        if not lo <= u <= hi:
            raise InvariantError(f"{u} escapes its own characteristic pair")
        _must_verify(u, b, trace)
        return PhiResult(b, Case.IV, cert, None, tuple(trace))

    v, _ = _longest_central_prefix(u, trace)
    letters = set(v)
    if letters == {"1"}:
        case, w = Case.I, v[:-1]
        trace.append(f"all-ones prefix 1^{len(v)}: phi = (1^{len(v)}0)^oo")
    elif letters == {"0"}:
        case, w = Case.II, v[:-1]
        trace.append(f"all-zeros prefix 0^{len(v)}: phi = (10^{len(v)})^oo")
    else:
        cert_v = is_central(v)
        x, y = u.digit(len(v)), u.digit(len(v) + 1)
        if x == y:
            case, w = (Case.V_B, cert_v.w2) if x == "0" else (Case.V_C, cert_v.w1)
            trace.append(f"after {v!r}: xy = {x}{y}, no comparison needed")
        else:
            bound = v + x + y
            z = u.prefix(2 * len(v) + 4)[len(v) + 2:]
            if z == bound:
                raise InvariantError(
                    f"prefix {z!r} equals {bound!r}: contradicts maximality "
                    f"of the central prefix {v!r}")
            z_high = z > bound
            if x == "0":  # xy = 01
                case, w = (Case.V_A, v) if z_high else (Case.V_B, cert_v.w2)
            else:  # xy = 10
                case, w = (Case.V_A, v) if not z_high else (Case.V_C, cert_v.w1)
            rel = ">" if z_high else "<"
            trace.append(f"after {v!r}: xy = {x}{y}, z {rel} v{x}{y}")

    cert = is_central(w)
    if cert is None:
        raise InvariantError(f"derived word {w!r} is not central")
    b = Seq("", "1" + w + "0")
    lo, hi = Seq("", w + "01"), Seq("", w + "10")
    if not lo < u < hi:
        raise InvariantError(
            f"sandwich ({w}01)^oo < u < ({w}10)^oo fails for u = {u}")
    trace.append(f"sandwich around central word {w!r} confirmed")
    _must_verify(u, b, trace)
    return PhiResult(b, case, cert, v, tuple(trace))


def phi(a: Seq) -> PhiResult:
    """phi of a full bound sequence: 1-headed bounds force the all-ones
    answer, 0-headed bounds delegate to the tail."""
    if a.digit(0) == "1":
        trace = ("bound starts with 1: only the all-ones sequence has every "
                 "shift above it",)
        return PhiResult(ONE, Case.I, None, None, trace)
    return phi_zero_u(a.shift(1))


# -- finite-prefix decisions ---------------------------------------------


@dataclass(frozen=True)
class PrefixDecision:
    decided: bool
    result: PhiResult | None = None
    reason: str | None = None


def phi_prefix(p_word: str) -> PrefixDecision:
    """Decide phi(0u) from a finite prefix of u, when the prefix forces it.

    A candidate central word w is *witnessed* when both comparisons of the
    prefix against (w01)^oo and (w10)^oo are settled by mismatches inside
    the prefix, in the strict sandwich direction.  Every infinite
    extension of the prefix then satisfies the same strict sandwich, and
    uniqueness of the sandwiching central word makes (1w0)^oo the answer
    for all of them.  Candidates are exactly the central prefixes of the
    input, since every case of the analysis returns one of those.  If no
    candidate is witnessed the call reports what stayed undecided.
    """
    check_word(p_word)
    if not p_word:
        raise DomainError("cannot decide from an empty prefix")
    n = len(p_word)
    candidates = [p_word[:k] for k in range(n + 1)
                  if _central_periods(p_word[:k]) is not None]
    winners: list[tuple[str, int, int]] = []
    best_reason: str | None = None
    for w in reversed(candidates):
        low_i = _mismatch(p_word, Seq("", w + "01"))
        high_i = _mismatch(p_word, Seq("", w + "10"))
        if low_i is None or high_i is None:
            side = f"({w}01)^oo" if low_i is None else f"({w}10)^oo"
            if best_reason is None:
                best_reason = (f"comparison against {side} is undecided "
                               f"within the {n}-letter prefix")
            continue
        if p_word[low_i] == "1" and p_word[high_i] == "0":
            winners.append((w, low_i, high_i))
    if len(winners) > 1:
        raise InvariantError(
            f"two central words witnessed for prefix {p_word!r}: "
            f"{[w for w, _, _ in winners]!r}")
    if not winners:
        if best_reason is None:
            best_reason = (f"no central prefix of {p_word!r} is strictly "
                           "sandwiched within the prefix")
        return PrefixDecision(False, None, best_reason)

    w, low_i, high_i = winners[0]
    cert = is_central(w)
    case, visible = _prefix_case(p_word, w)
    trace = (
        f"lower bound ({w}01)^oo beaten at index {low_i}",
        f"upper bound ({w}10)^oo beaten at index {high_i}",
        "strict sandwich holds for every extension of the prefix",
    )
    b = Seq("", "1" + w + "0")
    return PrefixDecision(True, PhiResult(b, case, cert, visible, trace), None)


def _mismatch(word: str, s: Seq) -> int | None:
    """First index where ``word`` and ``s`` differ, if inside the word."""
    for i in range(len(word)):
        if word[i] != s.digit(i):
            return i
    return None


def _prefix_case(p_word: str, w: str) -> tuple[Case, str]:
    # Diagnostic tag from the longest central prefix visible in the input;
    # the phi value itself does not depend on this.
    v, n = "", len(p_word)
    while len(v) < n:
        nxt = palindromic_closure(v + p_word[len(v)])
        if len(nxt) > n or not p_word.startswith(nxt):
            break
        v = nxt
    letters = set(v)
    if letters == {"1"}:
        return Case.I, v
    if letters == {"0"}:
        return Case.II, v
    cert_v = is_central(v)
    if cert_v is not None and v:
        if w == v:
            return Case.V_A, v
        if w == cert_v.w2:
            return Case.V_B, v
        if w == cert_v.w1:
            return Case.V_C, v
    return Case.V_A, v


# -- aperiodic characteristic bounds --------------------------------------


@dataclass(frozen=True)
class SturmianPhi:
    """Symbolic phi(0u) = 1u for u the closure limit of ``directive``.

    The value is aperiodic, so it is exposed as a prefix generator plus
    the continued fraction of the slope read off the directive's block
    lengths.
    """

    directive: Seq
    case: Case = Case.III_STURMIAN

    @property
    def symbolic(self) -> str:
        return f"1*Pal({self.directive})"

    def u_prefix(self, n: int) -> str:
        return characteristic_sturmian_prefix(self.directive, n)

    def phi_value_prefix(self, n: int) -> str:
        if n < 1:
            raise DomainError("prefix length must be positive")
        return ("1" + self.u_prefix(n))[:n]

    def slope_cf(self, count: int) -> tuple[int, ...]:
        """First ``count`` partial quotients [a1, a2, ...] of the slope,
        from the directive's alternating block lengths (a1 = d1 + 1)."""
        if count < 1:
            raise DomainError("need at least one quotient")
        quotients: list[int] = []
        letter, run, i = "0", 0, 0
        while len(quotients) < count:
            c = self.directive.digit(i)
            if c == letter:
                run += 1
                i += 1
            else:
                quotients.append(run)
                letter, run = c, 0
        quotients[0] += 1
        return tuple(quotients[:count])


def phi_sturmian(delta: Seq) -> SturmianPhi:
    """phi(0u) for the aperiodic characteristic u directed by ``delta``."""
    if not is_sturmian_directive(delta):
        raise DomainError("directive is eventually constant; the limit is "
                          "periodic and handled by the slope-based path")
    return SturmianPhi(delta)


# -- the number-theoretic endpoint ----------------------------------------


@dataclass(frozen=True)
class FResult:
    """Least right endpoint F(x) with its combinatorial evidence."""

    x: Fraction
    F: Fraction
    phi_expansion: Seq
    case: Case
    verified: bool
    cmp_x_plus_half: int | None  # LT / EQ against x + 1/2; None at boundaries


def F(x: Fraction) -> FResult:
    """The least y such that every fractional part of some ksi * 2^n can be
    confined to [x, y].

    Above 1/2 only the all-ones expansion survives, so F = 1; at 0 the
    answer is 0.  Otherwise the lexicographically smaller expansion of x
    (beginning with 0) is fed to phi, and F is the exact value of the
    resulting sequence.  The exact comparison against x + 1/2 is recorded:
    characteristic inputs reach it or fall below, generic ones stay
    strictly below.
    """
    x = Fraction(x)
    if x < 0 or x > 1:
        raise DomainError(f"F is defined on [0, 1], got {x}")
    if x > Fraction(1, 2):
        a = expansion(x)
        if not sigma_member(ONE, a, ONE):
            raise InvariantError("all-ones witness rejected")
        return FResult(x, Fraction(1), ONE, Case.BOUNDARY_X_GT_HALF, True, None)
    if x == 0:
        if not sigma_member(ZERO, ZERO, ZERO):
            raise InvariantError("all-zeros witness rejected")
        return FResult(x, Fraction(0), ZERO, Case.BOUNDARY_X_ZERO, True, None)

    a = expansion(x)  # lesser form, begins with 0 since x <= 1/2
    res = phi(a)
    fval = res.phi.value()
    threshold = x + Fraction(1, 2)
    cmp = LT if fval < threshold else EQ if fval == threshold else GT
    if res.case is Case.IV and cmp == GT:
        raise InvariantError(f"F({x}) exceeds x + 1/2 in the characteristic case")
    if res.longest_central_prefix is not None and cmp != LT:
        raise InvariantError(f"F({x}) fails the strict bound below x + 1/2")
    return FResult(x, fval, res.phi, res.case, True, cmp)
