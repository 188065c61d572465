"""Single-instance unit decisions in Z[x]/(x^n - a).

f defines units on n-th roots of a exactly when f(x) is invertible in
Z[x]/(x^n - a), which the resultant criterion |Res(x^n - a, f)| = 1
decides; a Bezout certificate can be extracted and independently
re-verified.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .polycore import (
    ONE,
    BezoutCertificate,
    IntPoly,
    NotAUnit,
    bezout_witness,
    resultant,
    xn_minus_const,
)


@dataclass(frozen=True, slots=True)
class UnitVerdict:
    """Outcome of one (f, n, a) unit test.

    is_unit iff |resultant| = 1; a present certificate implies is_unit
    and has been verified by exact arithmetic.
    """

    f: IntPoly
    n: int
    a: int
    is_unit: bool
    resultant: int
    certificate: BezoutCertificate | None = None


def defines_units_on_roots(
    f: IntPoly, n: int, a: int, want_certificate: bool = False
) -> UnitVerdict:
    """Decide whether f defines units on n-th roots of a.

    Raises InvalidInputError for a = 0, n < 1 or f = 0; the zero
    polynomial is rejected rather than reported non-unit so callers must
    handle the degenerate case explicitly.
    """
    if a == 0:
        raise InvalidInputError("a must be nonzero")
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    if f.is_zero:
        raise InvalidInputError("zero polynomial is never a unit; rejected")
    r = resultant(xn_minus_const(n, a), f)
    is_unit = r in (1, -1)
    certificate = None
    if want_certificate and is_unit:
        witness = bezout_witness(f, n, a)
        assert isinstance(witness, BezoutCertificate)
        certificate = witness
    return UnitVerdict(
        f=f, n=n, a=a, is_unit=is_unit, resultant=r, certificate=certificate
    )


def defines_unit_on_order(
    f: IntPoly, n: int, want_certificate: bool = False
) -> UnitVerdict:
    """Group-ring form: is f(x) a unit of Z C_n?  Alias for a = 1."""
    return defines_units_on_roots(f, n, 1, want_certificate)


def verify_certificate(f: IntPoly, cert: BezoutCertificate) -> bool:
    """True iff p*f + q*(x^n - a) = 1 exactly and the degree contract
    (deg p < n, deg q < deg f) holds."""
    if cert.n < 1 or cert.a == 0:
        return False
    # zero polynomials carry degree -1, so q = 0 passes for constant f
    if cert.p.degree >= cert.n or cert.q.degree >= f.degree:
        return False
    g = xn_minus_const(cert.n, cert.a)
    return cert.p * f + cert.q * g == ONE


__all__ = [
    "UnitVerdict",
    "NotAUnit",
    "defines_units_on_roots",
    "defines_unit_on_order",
    "verify_certificate",
]
