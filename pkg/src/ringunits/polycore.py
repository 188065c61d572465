"""Exact dense polynomial arithmetic over arbitrary-precision integers.

Provides the IntPoly value type, resultants via the subresultant
remainder sequence, an independent multiplication-matrix determinant
oracle, and Bezout certificate extraction for units of Z[x]/(x^n - a).

All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import kernels as _k
from .errors import InvalidInputError


@dataclass(frozen=True, slots=True)
class IntPoly:
    """Dense integer polynomial; coeffs[i] is the coefficient of x^i.

    Normalized on construction: no trailing zeros, so the zero polynomial
    has an empty coefficient tuple and equality is plain tuple equality.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = self.coeffs
        if not isinstance(c, tuple) or (c and c[-1] == 0):
            t = list(c)
            while t and t[-1] == 0:
                t.pop()
            object.__setattr__(self, "coeffs", tuple(t))

    # -- inspection ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 marks the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def trailing_index(self) -> int:
        """Lowest exponent with nonzero coefficient; -1 for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    @property
    def trailing_coefficient(self) -> int:
        i = self.trailing_index
        return self.coeffs[i] if i >= 0 else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return IntPoly(tuple(_k.add(list(self.coeffs), list(other.coeffs))))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return IntPoly(tuple(_k.sub(list(self.coeffs), list(other.coeffs))))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(_k.neg(list(self.coeffs))))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(_k.scale(list(self.coeffs), other)))
        if isinstance(other, IntPoly):
            return IntPoly(tuple(_k.mul(list(self.coeffs), list(other.coeffs))))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def evaluate(self, a: int) -> int:
        """Exact value of the polynomial at the integer a (Horner)."""
        return _k.eval_at(list(self.coeffs), a)

    def content(self) -> int:
        """gcd of all coefficients; 0 for the zero polynomial."""
        return _k.content(list(self.coeffs))

    def inflate(self, d: int) -> IntPoly:
        """Substitute x^d for x (coefficients spread with stride d)."""
        if d < 1:
            raise InvalidInputError("inflation stride must be >= 1")
        if d == 1 or self.is_zero:
            return self
        out = [0] * (self.degree * d + 1)
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return IntPoly(tuple(out))

    def shift(self, k: int) -> IntPoly:
        """Multiply by x^k (k >= 0)."""
        if k < 0:
            raise InvalidInputError("shift must be nonnegative")
        if k == 0 or self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    # -- presentation ----------------------------------------------------

    def __str__(self) -> str:
        """Canonical ascending-term form, e.g. '1-x+x^2'."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(("-" if c < 0 else "+", body))
        sign0, body0 = parts[0]
        out = [body0 if sign0 == "+" else "-" + body0]
        for sign, body in parts[1:]:
            out.append(sign + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"IntPoly('{self}')"


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def _coerce(value):
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly((value,))
    return NotImplemented


def monomial(k: int, c: int = 1) -> IntPoly:
    """c * x^k."""
    if k < 0:
        raise InvalidInputError("monomial exponent must be nonnegative")
    return IntPoly((0,) * k + (c,))


def xn_minus_const(n: int, a: int) -> IntPoly:
    """x^n - a, the defining relation of Z[x]/(x^n - a)."""
    if n < 1:
        raise InvalidInputError("n must be >= 1")
    return IntPoly((-a,) + (0,) * (n - 1) + (1,))


def divide_exact(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """Quotient h with g*h = f exactly over Z, or None when none exists.

    Raises ZeroDivisionError when g is the zero polynomial.
    """
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero:
        return ZERO
    qr = _k.try_divmod(list(f.coeffs), list(g.coeffs))
    if qr is None:
        return None
    q, r = qr
    if r:
        return None
    return IntPoly(tuple(q))


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) = lc(f)^deg(g) * product of g over the roots of f.

    Computed by the fraction-free subresultant remainder sequence.  For
    nonzero f, g the value is 0 exactly when they share a nonconstant
    common factor.  Raises InvalidInputError when both inputs are zero.
    """
    if f.is_zero and g.is_zero:
        raise InvalidInputError("resultant requires a nonzero input")
    return _k.resultant(list(f.coeffs), list(g.coeffs))


def mult_matrix_det(f: IntPoly, n: int, a: int) -> int:
    """Determinant of multiplication by f on Z[x]/(x^n - a).

    The matrix acts on the basis 1, x, ..., x^(n-1); the determinant is
    evaluated by fraction-free (Bareiss) elimination.  Serves as the
    independent oracle for the resultant criterion: its absolute value
    always equals |Res(x^n - a, f)|.
    """
    if n < 1 or a == 0:
        raise InvalidInputError("need n >= 1 and a != 0")
    fbar = [0] * n
    for i, c in enumerate(f.coeffs):
        q, r = divmod(i, n)
        fbar[r] += c * a**q
    rows = [[0] * n for _ in range(n)]
    for j in range(n):  # column j: x^j * fbar mod (x^n - a)
        for t, c in enumerate(fbar):
            if c == 0:
                continue
            i = j + t
            if i < n:
                rows[i][j] += c
            else:
                rows[i - n][j] += c * a
    return _k.bareiss_det(rows)


@dataclass(frozen=True, slots=True)
class BezoutCertificate:
    """Witness that f is a unit of Z[x]/(x^n - a): p*f + q*(x^n - a) = 1.

    The degree contract deg p < n, deg q < deg f makes the pair unique.
    """

    p: IntPoly
    q: IntPoly
    n: int
    a: int


@dataclass(frozen=True, slots=True)
class NotAUnit:
    """Negative bezout_witness outcome; carries the offending resultant."""

    resultant: int


def bezout_witness(f: IntPoly, n: int, a: int) -> BezoutCertificate | NotAUnit:
    """Extract p, q with p*f + q*(x^n - a) = 1, or NotAUnit.

    A certificate exists exactly when |Res(x^n - a, f)| = 1; it is found
    by solving the Sylvester-style linear system, which is unimodular in
    that case, with fraction-free elimination.  The returned certificate
    satisfies deg p < n and deg q < deg f and is re-verified by exact
    arithmetic before being returned.
    """
    if a == 0 or n < 1:
        raise InvalidInputError("need n >= 1 and a != 0")
    if f.is_zero:
        raise InvalidInputError("zero polynomial is never a unit")
    g = xn_minus_const(n, a)
    r = resultant(g, f)
    if r not in (1, -1):
        return NotAUnit(resultant=r)
    d = f.degree
    if d == 0:
        c = f.coeffs[0]  # |c| = 1 here since |Res| = |c^n| = 1
        cert = BezoutCertificate(p=IntPoly((c,)), q=ZERO, n=n, a=a)
    else:
        size = n + d
        rows = [[0] * size for _ in range(size)]
        for j in range(n):  # columns for p: x^j * f
            for i, c in enumerate(f.coeffs):
                rows[j + i][j] = c
        for j in range(d):  # columns for q: x^j * (x^n - a)
            rows[j][n + j] = -a
            rows[j + n][n + j] = 1
        rhs = [1] + [0] * (size - 1)
        sol = _k.solve_unimodular(rows, rhs)
        cert = BezoutCertificate(
            p=IntPoly(tuple(sol[:n])), q=IntPoly(tuple(sol[n:])), n=n, a=a
        )
    if cert.p * f + cert.q * g != ONE:
        raise ArithmeticError("certificate extraction produced an invalid witness")
    return cert
