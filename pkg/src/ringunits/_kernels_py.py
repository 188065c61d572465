"""Integer polynomial and matrix kernels, pure Python.

A polynomial is a dense list of Python ints in ascending order: index i
holds the coefficient of x^i.  Lists are normalized: the zero polynomial
is [] and otherwise the last entry is nonzero.  Every function is pure
and returns fresh lists.

``ringunits._kernels`` is the compiled twin of this module.  The two must
expose the same names and produce identical values; ``ringunits._backend``
picks whichever is importable.
"""

from math import gcd


def normalize(c):
    """Strip trailing zeros in place; return the list."""
    while c and c[-1] == 0:
        c.pop()
    return c


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] += b[i]
    return normalize(out)


def sub(a, b):
    out = list(a)
    if len(out) < len(b):
        out.extend([0] * (len(b) - len(out)))
    for i in range(len(b)):
        out[i] -= b[i]
    return normalize(out)


def neg(a):
    return [-x for x in a]


def scale(a, k):
    if k == 0:
        return []
    return [x * k for x in a]


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        x = a[i]
        if x:
            for j in range(len(b)):
                out[i + j] += x * b[j]
    return out


def eval_at(a, x):
    """Horner evaluation of the polynomial at the integer x."""
    acc = 0
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc


def content(a):
    """gcd of all coefficients (nonnegative); 0 for the zero polynomial."""
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def exact_div(x, y):
    q, r = divmod(x, y)
    if r:
        raise ArithmeticError("non-exact division in fraction-free step")
    return q


def exact_div_scalar(a, k):
    return [exact_div(x, k) for x in a]


def try_divmod(a, b):
    """Greedy long division of a by b over the integers.

    Returns (q, r) with a = q*b + r and deg r < deg b whenever every
    leading-coefficient division along the way is exact; returns None the
    moment one is not (a is then not divisible by b in Z[x], though it may
    be over Q).  b must be nonzero.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[db]
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        lead = r[i]
        if lead == 0:
            continue
        t, rem = divmod(lead, lb)
        if rem:
            return None
        q[i - db] = t
        r[i] = 0
        for j in range(db):
            r[i - db + j] -= t * b[j]
    return normalize(q), normalize(r)


def prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.

    Requires deg a >= deg b >= 1.  Low coefficients receive their pending
    powers of lc(b) lazily, as the elimination window reaches them, so the
    cost is O(deg a * deg b) coefficient operations rather than quadratic
    in deg a.
    """
    da = len(a) - 1
    db = len(b) - 1
    c = b[db]
    r = list(a)
    steps = da - db + 1
    cpow = [1] * steps
    for t in range(1, steps):
        cpow[t] = cpow[t - 1] * c
    for i in range(da, db - 1, -1):
        r[i - db] *= cpow[da - i]
        lead = r[i]
        for j in range(1, db + 1):
            r[i - j] = c * r[i - j] - lead * b[db - j]
        r[i] = 0
    del r[db:]
    return normalize(r)


def resultant(a, b):
    """Res(a, b) = lc(a)^deg(b) * product of b over the roots of a.

    Subresultant (fraction-free) remainder sequence with content
    extraction.  For both-nonzero inputs the value is 0 exactly when a and
    b share a nonconstant factor.  Raises ValueError when both inputs are
    zero; a single zero input yields 0.
    """
    if not a and not b:
        raise ValueError("resultant of two zero polynomials")
    if not a or not b:
        return 0
    da = len(a) - 1
    db = len(b) - 1
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da & 1) and (db & 1):
            s = -1
    if db == 0:
        if da == 0:
            return 1
        return s * b[0] ** da
    ca = content(a)
    cb = content(b)
    A = [x // ca for x in a]
    B = [x // cb for x in b]
    t = ca ** db * cb ** da
    g = 1
    h = 1
    while True:
        da = len(A) - 1
        db = len(B) - 1
        delta = da - db
        if (da & 1) and (db & 1):
            s = -s
        R = prem(A, B)
        A = B
        if not R:
            return 0
        divisor = g * h ** delta
        B = [exact_div(x, divisor) for x in R]
        g = A[-1]
        if delta:
            h = exact_div(g ** delta, h ** (delta - 1))
        if len(B) == 1:
            break
    dA = len(A) - 1
    return s * t * exact_div(B[0] ** dA, h ** (dA - 1))


def bareiss_det(rows):
    """Determinant of a square integer matrix, fraction-free (Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            fac = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(pivot * row_i[j] - fac * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def solve_unimodular(rows, rhs):
    """Solve M x = rhs over the integers by Bareiss elimination.

    Meant for unimodular M (|det M| = 1), where the solution is integral
    and every back-substitution division is exact.  Raises ValueError when
    M is singular and ArithmeticError when a division is not exact (i.e.
    the solution is not integral).
    """
    n = len(rows)
    m = [list(rows[i]) + [rhs[i]] for i in range(n)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                raise ValueError("singular linear system")
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            fac = row_i[k]
            for j in range(k + 1, n + 1):
                row_i[j] = exact_div(pivot * row_i[j] - fac * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    x = [0] * n
    for i in range(n - 1, -1, -1):
        acc = m[i][n]
        row_i = m[i]
        for j in range(i + 1, n):
            acc -= row_i[j] * x[j]
        x[i] = exact_div(acc, row_i[i])
    return x
