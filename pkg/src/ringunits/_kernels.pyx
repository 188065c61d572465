# cython: language_level=3
"""Integer polynomial and matrix kernels, compiled twin of _kernels_py.

Same contracts, same values; coefficients stay arbitrary-precision
Python ints, Cython only strips interpreter overhead from the loops.
"""

from math import gcd


def normalize(list c):
    """Strip trailing zeros in place; return the list."""
    while c and c[len(c) - 1] == 0:
        c.pop()
    return c


def add(list a, list b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    cdef list out = list(a)
    for i in range(lb):
        out[i] = out[i] + b[i]
    return normalize(out)


def sub(list a, list b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    cdef list out = list(a)
    if la < lb:
        out.extend([0] * (lb - la))
    for i in range(lb):
        out[i] = out[i] - b[i]
    return normalize(out)


def neg(list a):
    return [-x for x in a]


def scale(list a, k):
    if k == 0:
        return []
    return [x * k for x in a]


def mul(list a, list b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    cdef object x
    for i in range(la):
        x = a[i]
        if x != 0:
            for j in range(lb):
                out[i + j] = out[i + j] + x * b[j]
    return out


def eval_at(list a, x):
    """Horner evaluation of the polynomial at the integer x."""
    cdef Py_ssize_t i
    acc = 0
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc


def content(list a):
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


def exact_div_scalar(list a, k):
    return [exact_div(x, k) for x in a]


def try_divmod(list a, list b):
    """Greedy long division of a by b over the integers.

    Returns (q, r) with a = q*b + r and deg r < deg b whenever every
    leading-coefficient division along the way is exact; returns None the
    moment one is not.  b must be nonzero.
    """
    cdef Py_ssize_t i, j, db
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef list r = list(a)
    db = len(b) - 1
    lb = b[db]
    if len(r) - 1 < db:
        return [], r
    cdef list q = [0] * (len(r) - db)
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
            r[i - db + j] = r[i - db + j] - t * b[j]
    return normalize(q), normalize(r)


def prem(list a, list b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.

    Requires deg a >= deg b >= 1; lazy scaling of the untouched low
    coefficients keeps the cost at O(deg a * deg b).
    """
    cdef Py_ssize_t da = len(a) - 1
    cdef Py_ssize_t db = len(b) - 1
    cdef Py_ssize_t i, j, t, steps
    c = b[db]
    cdef list r = list(a)
    steps = da - db + 1
    cdef list cpow = [1] * steps
    for t in range(1, steps):
        cpow[t] = cpow[t - 1] * c
    for i in range(da, db - 1, -1):
        r[i - db] = r[i - db] * cpow[da - i]
        lead = r[i]
        for j in range(1, db + 1):
            r[i - j] = c * r[i - j] - lead * b[db - j]
        r[i] = 0
    del r[db:]
    return normalize(r)


def resultant(list a, list b):
    """Res(a, b) = lc(a)^deg(b) * product of b over the roots of a.

    Subresultant (fraction-free) remainder sequence with content
    extraction; see the pure-Python twin for the conventions.
    """
    cdef Py_ssize_t da, db, delta, dA
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
    cdef list A = [x // ca for x in a]
    cdef list B = [x // cb for x in b]
    t = ca ** db * cb ** da
    g = 1
    h = 1
    cdef list R
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
        g = A[len(A) - 1]
        if delta:
            h = exact_div(g ** delta, h ** (delta - 1))
        if len(B) == 1:
            break
    dA = len(A) - 1
    return s * t * exact_div(B[0] ** dA, h ** (dA - 1))


def bareiss_det(rows):
    """Determinant of a square integer matrix, fraction-free (Bareiss)."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    if n == 0:
        return 1
    cdef list m = [list(r) for r in rows]
    cdef list row_i, row_k
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        row_k = m[k]
        pivot = row_k[k]
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

    Meant for unimodular M; raises ValueError when singular and
    ArithmeticError when the solution is not integral.
    """
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef list m = [list(rows[i]) + [rhs[i]] for i in range(n)]
    cdef list row_i, row_k
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                raise ValueError("singular linear system")
        row_k = m[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = m[i]
            fac = row_i[k]
            for j in range(k + 1, n + 1):
                row_i[j] = exact_div(pivot * row_i[j] - fac * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    cdef list x = [0] * n
    for i in range(n - 1, -1, -1):
        row_i = m[i]
        acc = row_i[n]
        for j in range(i + 1, n):
            acc = acc - row_i[j] * x[j]
        x[i] = exact_div(acc, row_i[i])
    return x
