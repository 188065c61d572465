"""Elementary number theory and cyclotomic polynomials.

Trial-division factoring, Moebius and Euler phi, the prime-power shape
classification, cyclotomic polynomial generation by two independent
routes, and the closed-form table deciding Phi_m(a) = +-1 without any
polynomial evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import InvalidInputError, SizeLimitError
from .polycore import ONE, IntPoly, divide_exact, xn_minus_const

DEFAULT_FACTOR_LIMIT = 10**9
DEFAULT_DEGREE_BUDGET = 10_000


def factorize(n: int, limit: int = DEFAULT_FACTOR_LIMIT) -> list[tuple[int, int]]:
    """Prime factorization of n as (prime, exponent) pairs, ascending.

    n = 1 yields the empty list.  Raises SizeLimitError when n exceeds
    the trial-division budget.
    """
    if n < 1:
        raise InvalidInputError(f"cannot factor {n}: need n >= 1")
    if n > limit:
        raise SizeLimitError(f"{n} exceeds the factoring budget {limit}")
    out = []
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        out.append((2, e))
    p = 3
    while p <= isqrt(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 2
    if n > 1:
        out.append((n, 1))
    return out


def mobius(n: int) -> int:
    """Moebius function: 0 unless n is squarefree, else (-1)^(#primes)."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) & 1 else 1


def euler_phi(n: int) -> int:
    """Euler totient via the multiplicative formula."""
    out = 1
    for p, e in factorize(n):
        out *= (p - 1) * p ** (e - 1)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


@dataclass(frozen=True, slots=True)
class PrimePowerClass:
    """Shape tag of a positive integer m.

    kind is one of 'one', 'two', 'prime_power', 'twice_prime_power',
    'other'.  2 reports 'two' (not 'prime_power'); 'twice_prime_power'
    means m = 2 * p^alpha with p odd.  p and alpha are 0 unless the kind
    carries them.
    """

    kind: str
    p: int = 0
    alpha: int = 0


def prime_power_class(m: int) -> PrimePowerClass:
    """Classify m as One | Two | PrimePower | TwicePrimePower | Other."""
    if m < 1:
        raise InvalidInputError(f"need m >= 1, got {m}")
    if m == 1:
        return PrimePowerClass("one")
    if m == 2:
        return PrimePowerClass("two")
    fac = factorize(m)
    if len(fac) == 1:
        p, e = fac[0]
        return PrimePowerClass("prime_power", p, e)
    if len(fac) == 2 and fac[0] == (2, 1):
        p, e = fac[1]
        return PrimePowerClass("twice_prime_power", p, e)
    return PrimePowerClass("other")


def is_prime_power(m: int) -> bool:
    """True when m = p^alpha with alpha >= 1 (2, 4, 8, 9, ... but not 1)."""
    return m >= 2 and len(factorize(m)) == 1


def is_twice_any_prime_power(m: int) -> bool:
    """True when m/2 is a prime power, the exclusion next to 1 and 2 in
    the Phi_m(-1) table.  Unlike the TwicePrimePower tag this admits
    p = 2, so 4, 8, 16, ... qualify along with 6, 18, 50, ...
    """
    return m % 2 == 0 and is_prime_power(m // 2)


_cyclo_cache: dict[int, IntPoly] = {}


def cyclotomic(m: int, max_degree: int = DEFAULT_DEGREE_BUDGET) -> IntPoly:
    """The m-th cyclotomic polynomial, degree euler_phi(m).

    Computed by the division chain Phi_m = (x^m - 1) / prod of Phi_d over
    proper divisors d, with memoization.  Raises SizeLimitError when the
    degree would exceed max_degree.
    """
    if m < 1:
        raise InvalidInputError(f"need m >= 1, got {m}")
    if euler_phi(m) > max_degree:
        # budget is per call, so it must be enforced ahead of the cache
        raise SizeLimitError(
            f"phi({m}) = {euler_phi(m)} exceeds the degree budget {max_degree}"
        )
    cached = _cyclo_cache.get(m)
    if cached is not None:
        return cached
    poly = xn_minus_const(m, 1)
    for d in divisors(m)[:-1]:
        quotient = divide_exact(poly, cyclotomic(d, max_degree))
        assert quotient is not None
        poly = quotient
    _cyclo_cache[m] = poly
    return poly


def cyclotomic_via_mobius(m: int, max_degree: int = DEFAULT_DEGREE_BUDGET) -> IntPoly:
    """Independent second route: prod over d | m of (x^d - 1)^mu(m/d).

    All numerator terms are multiplied first, then each denominator term
    is divided out exactly; no memoization and no code shared with the
    division chain, so the two constructions can check each other.
    """
    if m < 1:
        raise InvalidInputError(f"need m >= 1, got {m}")
    if euler_phi(m) > max_degree:
        raise SizeLimitError(
            f"phi({m}) = {euler_phi(m)} exceeds the degree budget {max_degree}"
        )
    numerator = ONE
    denominators = []
    for d in divisors(m):
        mu = mobius(m // d)
        if mu == 1:
            numerator = numerator * xn_minus_const(d, 1)
        elif mu == -1:
            denominators.append(xn_minus_const(d, 1))
    for term in denominators:
        quotient = divide_exact(numerator, term)
        assert quotient is not None
        numerator = quotient
    return numerator


@dataclass(frozen=True, slots=True)
class PhiClass:
    """Whether Phi_m(a) equals +1 or -1, decided from the case table.

    At most one flag is true; for |a| >= 3 both are false.
    """

    m: int
    a: int
    plus_one: bool
    minus_one: bool


def phi_is_pm1(m: int, a: int) -> PhiClass:
    """Classify Phi_m(a) = +-1 from the case table alone.

    Never evaluates Phi_m; the table is the point, and the evaluation
    route exists separately so the two can be tested against each other.
    Value +1 holds iff (a=0, m!=1), (a=1, m neither 1 nor a prime power),
    (a=-1, m neither 1, nor 2, nor twice a prime power), or (a=2, m=1);
    value -1 holds iff (a=0, m=1) or (a=-2, m=2).
    """
    if m < 1:
        raise InvalidInputError(f"need m >= 1, got {m}")
    plus = minus = False
    if a == 0:
        plus = m != 1
        minus = m == 1
    elif a == 1:
        plus = m != 1 and not is_prime_power(m)
    elif a == -1:
        plus = m not in (1, 2) and not is_twice_any_prime_power(m)
    elif a == 2:
        plus = m == 1
    elif a == -2:
        minus = m == 2
    return PhiClass(m=m, a=a, plus_one=plus, minus_one=minus)
