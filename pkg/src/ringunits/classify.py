"""Classification of unit-order sets.

factor_shape decomposes f as content * sign * x^k * prod Phi_mi^ei *
remainder; on top of that sit the generic-unit test, the exact periodic
description of the unit-order set for cyclotomic shapes, the
infinite/finite classification, finite enumeration, and the cardinality
bound 3 * 7^((n-d)(1+2k)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .cyclo import cyclotomic, euler_phi, factorize, is_prime_power, phi_is_pm1
from .errors import InvalidInputError, ShapeNotCyclotomicError
from .polycore import ONE, IntPoly, divide_exact
from .unitcheck import defines_units_on_roots

DEFAULT_SCAN_LIMIT = 1000


@dataclass(frozen=True, slots=True)
class CycloShape:
    """f = content * sign * x^x_power * prod Phi_m^e * remainder, exactly.

    cyclo_factors holds (index m, multiplicity) pairs ascending by m.
    The remainder has positive leading coefficient, nonzero constant
    term, and no cyclotomic factor.
    """

    content: int
    sign: int
    x_power: int
    cyclo_factors: tuple[tuple[int, int], ...]
    remainder: IntPoly

    @property
    def is_pure_cyclotomic(self) -> bool:
        """Content 1 and remainder 1: the only shape whose unit-order set
        can be infinite."""
        return self.content == 1 and self.remainder == ONE

    def reconstruct(self) -> IntPoly:
        """Multiply the decomposition back out (round-trip check)."""
        out = self.remainder * (self.content * self.sign)
        for m, e in self.cyclo_factors:
            out = out * cyclotomic(m) ** e
        return out.shift(self.x_power)


@dataclass(frozen=True, slots=True)
class PeriodicSet:
    """Union of residue classes mod a fixed modulus.

    A positive integer n belongs iff n % modulus is in residues (residue
    0 therefore means multiples of the modulus).  Empty residues is the
    empty set.
    """

    modulus: int
    residues: frozenset[int]

    def __contains__(self, n: int) -> bool:
        return n >= 1 and n % self.modulus in self.residues

    @property
    def is_empty(self) -> bool:
        return not self.residues

    def members_up_to(self, limit: int) -> list[int]:
        return [n for n in range(1, limit + 1) if n % self.modulus in self.residues]

    def sorted_residues(self) -> list[int]:
        return sorted(self.residues)


@dataclass(frozen=True, slots=True)
class Classification:
    """Tagged verdict on the set M of orders where f defines units.

    kind 'all' (f = +-1), 'empty', 'infinite' (with the exact periodic
    set), or 'finite' (with the cardinality bound, the members found up
    to scan_limit and exhaustive=False: the bound caps |M|, not max M,
    so no scan can certify completeness).
    """

    kind: str
    periodic: PeriodicSet | None = None
    bound: int | None = None
    members: tuple[int, ...] = ()
    scan_limit: int | None = None
    exhaustive: bool | None = None

    @classmethod
    def all_orders(cls) -> Classification:
        return cls(kind="all")

    @classmethod
    def empty(cls) -> Classification:
        return cls(kind="empty")

    @classmethod
    def infinite(cls, periodic: PeriodicSet) -> Classification:
        return cls(kind="infinite", periodic=periodic)

    @classmethod
    def finite(cls, bound: int, members, scan_limit: int) -> Classification:
        return cls(
            kind="finite",
            bound=bound,
            members=tuple(members),
            scan_limit=scan_limit,
            exhaustive=False,
        )


def factor_shape(f: IntPoly) -> CycloShape:
    """Extract content, sign, the x-power and all cyclotomic factors.

    Candidate indices m are walked upward while m <= 2*d^2 for the
    current remainder degree d (complete since phi(m) >= sqrt(m/2)),
    skipping any m with phi(m) > d; each hit is divided out to its full
    multiplicity.
    """
    if f.is_zero:
        raise InvalidInputError("cannot take the shape of the zero polynomial")
    c = f.content()
    g = IntPoly(tuple(x // c for x in f.coeffs))
    sign = 1
    if g.leading_coefficient < 0:
        sign = -1
        g = -g
    x_power = g.trailing_index
    if x_power:
        g = IntPoly(g.coeffs[x_power:])
    factors = []
    d = g.degree
    m = 1
    while d >= 1 and m <= 2 * d * d:
        if euler_phi(m) <= d:
            phi_m = cyclotomic(m)
            mult = 0
            while True:
                q = divide_exact(g, phi_m)
                if q is None:
                    break
                g = q
                mult += 1
            if mult:
                factors.append((m, mult))
                d = g.degree
        m += 1
    return CycloShape(
        content=c,
        sign=sign,
        x_power=x_power,
        cyclo_factors=tuple(factors),
        remainder=g,
    )


@dataclass(frozen=True, slots=True)
class GenericVerdict:
    """is_generic outcome with its explanation.

    When generic, modulus is the D with units on every order coprime to
    D.  Otherwise offending_indices lists the cyclotomic factor indices
    that are 1 or a prime power; a content or remainder obstruction shows
    in the embedded shape.
    """

    is_generic: bool
    modulus: int | None
    offending_indices: tuple[int, ...]
    shape: CycloShape


def is_generic(f: IntPoly) -> GenericVerdict:
    """Does f define generic units, i.e. is f = +-x^k * prod Phi_mi with
    every mi neither 1 nor a prime power?

    On success D is the lcm of the factor indices (1 when there are
    none); f then defines a unit on every order coprime to D.
    """
    shape = factor_shape(f)
    offenders = tuple(
        m for m, _ in shape.cyclo_factors if m == 1 or is_prime_power(m)
    )
    ok = shape.content == 1 and shape.remainder == ONE and not offenders
    modulus = None
    if ok:
        modulus = lcm(*(m for m, _ in shape.cyclo_factors)) if shape.cyclo_factors else 1
    return GenericVerdict(
        is_generic=ok, modulus=modulus, offending_indices=offenders, shape=shape
    )


def unit_residues(shape: CycloShape, a: int) -> PeriodicSet:
    """Exact periodic description of the unit orders of a pure
    cyclotomic shape: n is in the set iff n mod L is in the residues.

    For each factor index m the relevant quantity is d = m / gcd(n, m),
    which depends on n only through n mod L, L = lcm of the indices; a
    residue qualifies iff every factor's d lands on a +-1 row of the
    Phi table, and an x factor additionally forces |a| = 1.
    """
    if a == 0:
        raise InvalidInputError("a must be nonzero")
    if not shape.is_pure_cyclotomic:
        raise ShapeNotCyclotomicError(
            "unit_residues needs content 1 and remainder 1"
        )
    indices = [m for m, _ in shape.cyclo_factors]
    modulus = lcm(*indices) if indices else 1
    if shape.x_power > 0 and a not in (1, -1):
        return PeriodicSet(modulus=modulus, residues=frozenset())
    residues = set()
    for r in range(modulus):
        for m in indices:
            d = m // gcd(r, m)  # gcd(0, m) = m, so residue 0 gives d = 1
            cls = phi_is_pm1(d, a)
            if not (cls.plus_one or cls.minus_one):
                break
        else:
            residues.add(r)
    return PeriodicSet(modulus=modulus, residues=frozenset(residues))


def compute_bound(f: IntPoly, a: int) -> int:
    """Cardinality bound 3 * 7^((n-d)(1+2k)) for the unit-order set,
    with n = deg f, d the lowest nonzero exponent and k the number of
    distinct primes dividing a * c_d * c_n."""
    if f.is_zero:
        raise InvalidInputError("zero polynomial has no bound")
    if a == 0:
        raise InvalidInputError("a must be nonzero")
    n = f.degree
    d = f.trailing_index
    k = len(factorize(abs(a * f.trailing_coefficient * f.leading_coefficient)))
    return 3 * 7 ** ((n - d) * (1 + 2 * k))


def classify_roots(
    f: IntPoly, a: int, scan_limit: int = DEFAULT_SCAN_LIMIT
) -> Classification:
    """Classify the set M of n for which f defines units on n-th roots
    of a: All / Empty / Infinite (exact periodic set) / Finite (bound
    plus the members found by scanning to scan_limit)."""
    if a == 0:
        raise InvalidInputError("a must be nonzero")
    if scan_limit < 1:
        raise InvalidInputError("scan limit must be >= 1")
    if f.is_zero:
        return Classification.empty()
    if f == ONE or f == -ONE:
        return Classification.all_orders()
    shape = factor_shape(f)
    if shape.content != 1:
        return Classification.empty()
    if shape.remainder == ONE:
        periodic = unit_residues(shape, a)
        if periodic.is_empty:
            return Classification.empty()
        return Classification.infinite(periodic)
    bound = compute_bound(f, a)
    members = [
        n
        for n in range(1, scan_limit + 1)
        if defines_units_on_roots(f, n, a).is_unit
    ]
    return Classification.finite(bound=bound, members=members, scan_limit=scan_limit)


def enumerate_orders(f: IntPoly, a: int, scan_limit: int) -> list[int]:
    """Ascending n <= scan_limit on which f defines units on n-th roots
    of a.  Pure cyclotomic shapes come straight from the residue set;
    everything else is scanned with one resultant per n."""
    if f.is_zero:
        raise InvalidInputError("zero polynomial defines no units")
    if a == 0:
        raise InvalidInputError("a must be nonzero")
    if scan_limit < 1:
        raise InvalidInputError("scan limit must be >= 1")
    shape = factor_shape(f)
    if shape.is_pure_cyclotomic:
        return unit_residues(shape, a).members_up_to(scan_limit)
    return [
        n
        for n in range(1, scan_limit + 1)
        if defines_units_on_roots(f, n, a).is_unit
    ]
