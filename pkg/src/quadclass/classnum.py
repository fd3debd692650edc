"""Class number h(D) of an imaginary quadratic field by several exact routes.

All routes are finite sums over one period of character values or expansion
digits, evaluated in exact integer (or rational) arithmetic:

  * the weighted character sum  h = -(1/N) sum chi(x) x  over x in [1, N];
  * per-cycle digit sums of the base-B expansions of x/N, combined with
    weight 1/(B+1) (alternating, chi(B) = -1) or 1/(B-1) (plain, chi(B) = +1);
  * the floor sum  -sum chi(x) floor(Bx/N) = (B - chi(B)) h;
  * weighted sums of the subinterval character totals E_k(B), either at B
    directly or regrouped through a divisor B1 of B.

Every route checks divisibility and positivity of its final division; a
failure raises InternalError because the identities admit no exceptions.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import is_prime, is_primitive_root, least_primitive_root
from .discriminant import Discriminant, QuadChar, from_discriminant, quad_char
from .errors import (
    ExcludedDiscriminantError,
    InternalError,
    InvalidFactorizationError,
    NotCoprimeError,
    WrongParityError,
)
from .expansion import all_cycles, expand, normalize_cycle, ExpansionPeriod

__all__ = [
    "HResult",
    "EkTable",
    "alternating_digit_sum",
    "h_dirichlet",
    "h_cycle_contribution",
    "h_theorem1",
    "h_floor_formula",
    "ek_table",
    "h_from_ek",
    "h_from_ek_factored",
    "h_girstmair",
    "xi",
    "eta",
    "lambda_map",
]


@dataclass(frozen=True)
class HResult:
    """A class number together with the route and raw sum that produced it."""

    disc: Discriminant
    h: int
    method: str
    raw_sum: int


@dataclass(frozen=True)
class EkTable:
    """Character totals over the B subintervals (kN/B, (k+1)N/B) of (0, N).

    entries[k] is E_k = sum of chi(x) over the k-th subinterval, and
    pos_counts/neg_counts split its support by sign.  boundaries holds the
    exact rational endpoints; none of the interior ones is an integer, so
    membership is unambiguous.
    """

    disc: Discriminant
    base: int
    entries: tuple[int, ...]
    boundaries: tuple[Fraction, ...]
    pos_counts: tuple[int, ...]
    neg_counts: tuple[int, ...]


def _check_coprime_base(disc: Discriminant, base: int) -> None:
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    if gcd(base, disc.N) != 1:
        raise NotCoprimeError(f"gcd({base}, {disc.N}) > 1 at D={disc.D}")


def _exact_h(disc: Discriminant, num: int, den: int, method: str, raw: int) -> HResult:
    """Divide num/den checking exactness and positivity; wrap as HResult."""
    h, r = divmod(num, den)
    if r:
        raise InternalError(f"{method} at D={disc.D}: {num} not divisible by {den}")
    if h < 1:
        raise InternalError(f"{method} at D={disc.D}: got h = {h} <= 0")
    return HResult(disc, h, method, raw)


def alternating_digit_sum(digits) -> int:
    """-a_1 + a_2 - a_3 + ... for a digit tuple indexed from 1."""
    return sum(digits[1::2]) - sum(digits[0::2])


@lru_cache(maxsize=256)
def h_dirichlet(disc: Discriminant) -> HResult:
    """h = -(1/N) sum_{x=1}^{N} chi(x) x.  The reference route."""
    vals = quad_char(disc).values()
    raw = sum(x * c for x, c in enumerate(vals) if c)
    return _exact_h(disc, -raw, disc.N, "dirichlet", raw)


def h_cycle_contribution(period: ExpansionPeriod, char: QuadChar) -> Fraction:
    """Exact rational contribution of one expansion cycle to h.

    For chi(B) = -1 the cycle is normalized first and contributes the
    alternating digit sum over B + 1; for chi(B) = +1 it contributes
    -chi(C) times the plain digit sum over B - 1, where chi(C) is the
    constant character value on the cycle.
    """
    if char.disc.N != period.n:
        raise ValueError(f"character mod {char.disc.N} does not match modulus {period.n}")
    s = char.eval(period.base)
    if s == 0:
        raise NotCoprimeError(f"gcd({period.base}, {char.disc.N}) > 1")
    if s == -1:
        normalized = normalize_cycle(period, char)
        return Fraction(alternating_digit_sum(normalized.digits), period.base + 1)
    return Fraction(-char.eval(period.x1) * sum(period.digits), period.base - 1)


def h_theorem1(disc: Discriminant, base: int) -> HResult:
    """h as the sum of the contributions of all cycles of the base-B map."""
    _check_coprime_base(disc, base)
    char = quad_char(disc)
    total = Fraction(0)
    for period in all_cycles(base, disc.N).cycles:
        total += h_cycle_contribution(period, char)
    if total.denominator != 1:
        raise InternalError(f"cycle route at D={disc.D}, B={base}: non-integral {total}")
    h = int(total)
    if h < 1:
        raise InternalError(f"cycle route at D={disc.D}, B={base}: got h = {h} <= 0")
    raw = h * (base - char.eval(base))
    return HResult(disc, h, f"cycle[B={base}]", raw)


def h_floor_formula(disc: Discriminant, base: int) -> HResult:
    """h from -sum chi(x) floor(Bx/N) = (B - chi(B)) h, one term per x."""
    _check_coprime_base(disc, base)
    char = quad_char(disc)
    vals = char.values()
    n = disc.N
    raw = 0
    for x in range(1, n):
        c = vals[x]
        if c:
            raw -= c * (base * x // n)
    return _exact_h(disc, raw, base - char.eval(base), f"floor[B={base}]", raw)


def ek_table(disc: Discriminant, base: int) -> EkTable:
    """Tabulate E_k, sign counts and exact endpoints for all B subintervals.

    gcd(B, N) = 1 keeps every interior endpoint kN/B non-integral, so the
    k-th subinterval holds exactly the integers floor(kN/B) < x <= floor((k+1)N/B)
    (the top endpoint x = N carries chi = 0 and changes nothing).
    """
    _check_coprime_base(disc, base)
    n = disc.N
    for k in range(1, base):
        if k * n % base == 0:
            raise InternalError(f"integral endpoint {k}*{n}/{base}")
    vals = quad_char(disc).values()
    cuts = [k * n // base for k in range(base + 1)]
    entries = []
    pos = []
    neg = []
    for k in range(base):
        window = vals[cuts[k] + 1 : cuts[k + 1] + 1]
        entries.append(sum(window))
        pos.append(window.count(1))
        neg.append(window.count(-1))
    boundaries = tuple(Fraction(k * n, base) for k in range(base + 1))
    return EkTable(disc, base, tuple(entries), boundaries, tuple(pos), tuple(neg))


def h_from_ek(disc: Discriminant, base: int) -> HResult:
    """h from the half-table identity sum_{k < B/2} (B-1-2k) E_k = (B - chi(B)) h."""
    table = ek_table(disc, base)
    raw = sum((base - 1 - 2 * k) * e for k, e in enumerate(table.entries[: base // 2]))
    s = quad_char(disc).eval(base)
    return _exact_h(disc, raw, base - s, f"interval[B={base}]", raw)


def h_from_ek_factored(disc: Discriminant, base: int, b1: int) -> HResult:
    """h from the fine E_k(B) regrouped into B1 blocks, B = B1 * B2.

    Summing E_k(B) over each block of B2 consecutive fine intervals gives
    the coarse totals E_j(B1); the half-table identity then runs at B1:
    sum_{j < B1/2} (B1-1-2j) E_j = (B1 - chi(B1)) h.  B1 = B is allowed and
    degenerates to the unfactored identity.
    """
    if b1 < 2 or b1 > base or base % b1:
        raise InvalidFactorizationError(f"B1={b1} does not factor B={base}")
    table = ek_table(disc, base)
    b2 = base // b1
    blocks = [sum(table.entries[j * b2 : (j + 1) * b2]) for j in range(b1)]
    raw = sum((b1 - 1 - 2 * j) * e for j, e in enumerate(blocks[: b1 // 2]))
    s1 = quad_char(disc).eval(b1)
    return _exact_h(disc, raw, b1 - s1, f"factored[B={base},B1={b1}]", raw)


def h_girstmair(p: int, base: int | None = None) -> HResult:
    """h(-p) for a prime p = 3 (mod 4) from one expansion of 1/p.

    When B is a primitive root mod p the residues coprime to p form a single
    cycle, so (B+1) h is the alternating digit sum of the period of 1/p.
    With no base given the least primitive root is used.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p % 4 != 3:
        raise ValueError(f"need p = 3 (mod 4), got p={p}")
    if p == 3:
        raise ExcludedDiscriminantError("p=3 gives D=-3, excluded")
    if base is None:
        base = least_primitive_root(p)
    elif base < 2 or not is_primitive_root(base, p):
        raise ValueError(f"B={base} is not a primitive root mod {p}")
    disc = from_discriminant(-p)
    period = expand(1, base, p)
    if period.e != p - 1:
        raise InternalError(f"primitive root {base} mod {p} gave period {period.e}")
    raw = alternating_digit_sum(period.digits)
    return _exact_h(disc, raw, base + 1, f"girstmair[B={base}]", raw)


def xi(x: int, n: int) -> int:
    """The reflection x -> N - x on X; it negates chi."""
    _check_member(x, n)
    return n - x


def eta(x: int, n: int) -> int:
    """The half-shift x -> x +/- N/2 on X for even discriminants; negates chi."""
    if n % 4:
        raise WrongParityError(f"eta needs 4 | N (even discriminant), got N={n}")
    _check_member(x, n)
    half = n // 2
    return x + half if x < half else x - half


def lambda_map(x: int, n: int) -> int:
    """The composition of xi and eta; preserves chi and fixes each half of (0, N).

    Sends x to N/2 - x on the lower half and to 3N/2 - x on the upper half,
    i.e. reflects the halves through N/4 and 3N/4.
    """
    if n % 4:
        raise WrongParityError(f"lambda_map needs 4 | N (even discriminant), got N={n}")
    _check_member(x, n)
    half = n // 2
    return half - x if x < half else 3 * half - x


def _check_member(x: int, n: int) -> None:
    if not 1 <= x <= n:
        raise ValueError(f"x={x} outside [1, {n}]")
    if gcd(x, n) != 1:
        raise NotCoprimeError(f"gcd({x}, {n}) > 1")
