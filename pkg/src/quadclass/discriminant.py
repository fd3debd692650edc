"""Fundamental discriminants D < -4 and their quadratic characters.

A negative squarefree m generates a field whose discriminant is D = m when
m = 1 (mod 4) and D = 4m otherwise.  Writing N = |D|, the character chi_D is
the completely multiplicative function of period N with chi_D(-1) = -1 that
splits over the case of D:

    odd D            chi(x) = (x / |m|)                       (Jacobi)
    m = 3 (mod 4)    chi(x) = chi4(x) (x / |m|)
    m = 2n, n = 1    chi(x) = chi8(x) (x / |n|)
    m = 2n, n = 3    chi(x) = chi4(x) chi8(x) (x / |n|)

with chi4, chi8 the characters mod 4 and 8 on odd arguments.  D = -3 and
D = -4 are excluded throughout: their extra units break the class number
identities this package checks.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd, isqrt

from .arith import is_squarefree, jacobi
from .errors import (
    ExcludedDiscriminantError,
    InvalidGeneratorError,
    NotFundamentalError,
)

__all__ = [
    "Case",
    "Discriminant",
    "from_generator",
    "from_discriminant",
    "chi4",
    "chi8",
    "QuadChar",
    "quad_char",
    "chi",
]


class Case(Enum):
    """Which of the four shapes D takes; drives the character formula."""

    ODD = "Odd"  # m = 1 (mod 4), D = m odd
    D1 = "D1"  # m = 3 (mod 4), D = 4m
    D2 = "D2"  # m = 2n, n = 1 (mod 4), D = 4m
    D3 = "D3"  # m = 2n, n = 3 (mod 4), D = 4m


@dataclass(frozen=True)
class Discriminant:
    """A fundamental discriminant D < -4 with its generator m and N = |D|."""

    D: int
    N: int
    m: int
    case: Case

    def __str__(self) -> str:
        return f"D={self.D} (N={self.N}, m={self.m}, case {self.case.value})"


def from_generator(m: int) -> Discriminant:
    """Discriminant of the field generated by sqrt(m), m < 0 squarefree."""
    if m >= 0:
        raise InvalidGeneratorError(f"need m < 0, got {m}")
    if not is_squarefree(-m):
        raise InvalidGeneratorError(f"{m} is not squarefree")
    if m in (-1, -3):
        raise ExcludedDiscriminantError(f"m={m} gives D in {{-3, -4}}, excluded")
    if m % 4 == 1:
        return Discriminant(m, -m, m, Case.ODD)
    if m % 4 == 3:
        return Discriminant(4 * m, -4 * m, m, Case.D1)
    # m even: m = 2n with n odd since m is squarefree.
    case = Case.D2 if (m // 2) % 4 == 1 else Case.D3
    return Discriminant(4 * m, -4 * m, m, case)


def from_discriminant(D: int) -> Discriminant:
    """Validate D as a fundamental discriminant < -4 and classify it."""
    if D in (-3, -4):
        raise ExcludedDiscriminantError(f"D={D} is excluded (extra units)")
    if D >= -4:
        raise NotFundamentalError(f"need D < -4, got {D}")
    if D % 4 == 1:
        if not is_squarefree(-D):
            raise NotFundamentalError(f"D={D} is not squarefree")
        return Discriminant(D, -D, D, Case.ODD)
    if D % 4 != 0:
        raise NotFundamentalError(f"D={D} is neither 1 nor 0 mod 4")
    m = D // 4
    if m % 4 == 1:
        raise NotFundamentalError(f"D={D} has D/4 = 1 (mod 4), so D/4 is the discriminant")
    if not is_squarefree(-m):
        raise NotFundamentalError(f"D={D} has D/4 not squarefree")
    if m % 4 == 3:
        return Discriminant(D, -D, m, Case.D1)
    return Discriminant(D, -D, m, Case.D2 if (m // 2) % 4 == 1 else Case.D3)


def chi4(x: int) -> int:
    """Character mod 4: +1 for x = 1 (mod 4), -1 for x = 3 (mod 4)."""
    if x % 2 == 0:
        raise ValueError(f"chi4 needs odd x, got {x}")
    return 1 if x % 4 == 1 else -1


def chi8(x: int) -> int:
    """Character mod 8: +1 for x = +/-1 (mod 8), -1 for x = +/-3 (mod 8)."""
    if x % 2 == 0:
        raise ValueError(f"chi8 needs odd x, got {x}")
    return 1 if x % 8 in (1, 7) else -1


class QuadChar:
    """The quadratic character chi_D, evaluated pointwise or tabulated.

    Instances are immutable apart from a lazily built value table; they are
    safe to share.  Use quad_char(disc) to get the cached instance.
    """

    def __init__(self, disc: Discriminant):
        self.disc = disc
        self._values: tuple[int, ...] | None = None

    def __repr__(self) -> str:
        return f"QuadChar(D={self.disc.D})"

    def eval(self, x: int) -> int:
        """chi_D(x) in {-1, 0, +1}; 0 exactly when gcd(x, N) > 1."""
        n = self.disc.N
        x = x % n or n
        if gcd(x, n) > 1:
            return 0
        case = self.disc.case
        if case is Case.ODD:
            return jacobi(x, n)
        if case is Case.D1:
            return chi4(x) * jacobi(x, -self.disc.m)
        odd_part = -self.disc.m // 2
        if case is Case.D2:
            return chi8(x) * jacobi(x, odd_part)
        return chi4(x) * chi8(x) * jacobi(x, odd_part)

    __call__ = eval

    def values(self) -> tuple[int, ...]:
        """Table (chi(0), chi(1), ..., chi(N)); chi(0) = 0, chi(N) = 0.

        Built once per instance with a smallest-prime-factor sieve so only
        primes pay for a Jacobi evaluation; composites fill in by complete
        multiplicativity.
        """
        if self._values is None:
            n = self.disc.N
            spf = list(range(n + 1))
            for p in range(2, isqrt(n) + 1):
                if spf[p] == p:
                    for q in range(p * p, n + 1, p):
                        if spf[q] == q:
                            spf[q] = p
            vals = [0] * (n + 1)
            vals[1] = 1
            for x in range(2, n + 1):
                p = spf[x]
                vals[x] = vals[p] * vals[x // p] if p < x else self.eval(x)
            self._values = tuple(vals)
        return self._values


@lru_cache(maxsize=64)
def quad_char(disc: Discriminant) -> QuadChar:
    """Shared QuadChar for disc; the value table is built at most once."""
    return QuadChar(disc)


def chi(disc: Discriminant, x: int) -> int:
    """Convenience: chi_D(x) through the cached character."""
    return quad_char(disc).eval(x)
