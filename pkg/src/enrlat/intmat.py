"""Exact matrix and number-theory helpers.

Matrices are lists of row lists over int or Fraction. Nothing here knows
about lattices; this layer is pure linear algebra and elementary arithmetic.
"""

from fractions import Fraction
from math import gcd, isqrt


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_mat(m):
    return [list(r) for r in m]


def transpose(m):
    if not m:
        return []
    return [[m[i][j] for i in range(len(m))] for j in range(len(m[0]))]


def mat_mul(a, b):
    if not a or not b:
        return []
    n, k, c = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(c):
            s = 0
            for t in range(k):
                s += ai[t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(m, v):
    return [sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m))]


def vec_mat(v, m):
    if not m:
        return []
    return [sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0]))]


def is_symmetric(m):
    n = len(m)
    if any(len(r) != n for r in m):
        return False
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(n))


def xgcd(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def det_bareiss(m):
    """Determinant of an integer matrix, fraction free."""
    n = len(m)
    if n == 0:
        return 1
    a = copy_mat(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_fraction(m):
    """Determinant of a matrix with Fraction entries (Gauss elimination)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] * inv
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def inverse_fraction(m):
    """Inverse of a square matrix, returned with Fraction entries."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(m)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [row[n:] for row in a]


def rational_rank(m):
    if not m:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = len(a), len(a[0])
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][c]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def snf_with_transforms(m):
    """Smith form with transforms: returns (d, u, v), u*m*v = d.

    d is diagonal with nonnegative entries and d[i] | d[i+1]. The pivot at
    every stage is the nonzero entry minimizing (abs value, row, col), which
    pins the whole computation down deterministically.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = copy_mat(m)
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    def row_sub(i, j, q):
        # row_i -= q * row_j
        if q:
            a[i] = [x - q * y for x, y in zip(a[i], a[j])]
            u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i, j, q):
        # col_i -= q * col_j
        if q:
            for r in a:
                r[i] -= q * r[j]
            for r in v:
                r[i] -= q * r[j]

    def reduce_at(t):
        while True:
            piv = None
            for i in range(t, rows):
                ai = a[i]
                for j in range(t, cols):
                    if ai[j] != 0:
                        key = (abs(ai[j]), i, j)
                        if piv is None or key < piv:
                            piv = key
            if piv is None:
                return False
            _, pi, pj = piv
            swap_rows(t, pi)
            swap_cols(t, pj)
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    row_sub(i, t, a[i][t] // a[t][t])
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    col_sub(j, t, a[t][j] // a[t][t])
                    if a[t][j]:
                        dirty = True
            if not dirty:
                return True

    t = 0
    while t < min(rows, cols):
        if not reduce_at(t):
            break
        t += 1

    n = min(rows, cols)
    for i in range(n):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            di, dj = a[i][i], a[i + 1][i + 1]
            if di and dj % di != 0:
                row_sub(i, i + 1, -1)
                reduce_at(i)
                for k in range(i, n):
                    if a[k][k] < 0:
                        a[k] = [-x for x in a[k]]
                        u[k] = [-x for x in u[k]]
                changed = True
                break
            if di == 0 and dj != 0:
                swap_rows(i, i + 1)
                swap_cols(i, i + 1)
                changed = True
                break
    return a, u, v


def snf_diagonal(m):
    d, _, _ = snf_with_transforms(m)
    n = min(len(m), len(m[0]) if m else 0)
    return [d[i][i] for i in range(n)]


def right_kernel_int(m):
    """Basis (list of columns as lists) of {x integer : m*x = 0}, saturated."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    d, _, v = snf_with_transforms(m)
    out = []
    for j in range(cols):
        dj = d[j][j] if j < min(rows, cols) else 0
        if dj == 0:
            out.append([v[i][j] for i in range(cols)])
    return out


def solve_int(m, b):
    """One integer solution x of m*x = b (columns convention), or None."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d, u, v = snf_with_transforms(m)
    c = mat_vec(u, b)
    y = [0] * cols
    for i in range(rows):
        di = d[i][i] if i < min(rows, cols) else 0
        if i < cols and di != 0:
            if c[i] % di != 0:
                return None
            y[i] = c[i] // di
        elif c[i] != 0:
            return None
    return mat_vec(v, y)


def hnf_rows(rows, ncols=None):
    """Canonical basis of the integer row span, lower-triangular style.

    Pivot of each basis row is its last nonzero coordinate; pivots are
    positive, entries in the pivot column of other rows reduced to
    [0, pivot). Returned sorted by pivot position.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    work = [list(r) for r in rows if any(r)]
    basis = {}
    while work:
        r = work.pop()
        while True:
            p = None
            for j in range(ncols - 1, -1, -1):
                if r[j] != 0:
                    p = j
                    break
            if p is None:
                break
            if p not in basis:
                if r[p] < 0:
                    r = [-x for x in r]
                basis[p] = r
                break
            b = basis[p]
            g, x, y = xgcd(b[p], r[p])
            comb = [x * bi + y * ri for bi, ri in zip(b, r)]
            rest = [(b[p] // g) * ri - (r[p] // g) * bi for bi, ri in zip(b, r)]
            basis[p] = comb
            r = rest
    pivots = sorted(basis)
    out = [basis[p] for p in pivots]
    # reduce entries sitting above other pivots
    for idx, p in enumerate(pivots):
        for jdx in range(len(out)):
            if jdx != idx and out[jdx][p] != 0:
                q = out[jdx][p] // out[idx][p]
                out[jdx] = [x - q * y for x, y in zip(out[jdx], out[idx])]
    return out


def frac_rows_span_basis(rows, ncols):
    """Z-basis of the group generated by rational rows plus Z^ncols.

    Returns rows with Fraction entries.
    """
    dens = [1]
    for r in rows:
        for x in r:
            dens.append(Fraction(x).denominator)
    d = 1
    for q in dens:
        d = d * q // gcd(d, q)
    scaled = [[int(Fraction(x) * d) for x in r] for r in rows]
    scaled += [[d if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    basis = hnf_rows(scaled, ncols)
    return [[Fraction(x, d) for x in r] for r in basis]


def prime_factors(n):
    """Prime factorization by trial division, as an ordered dict p -> e."""
    n = abs(n)
    out = {}
    if n <= 1:
        return out
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return dict(sorted(out.items()))


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def val_p(n, p):
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def inv_mod(a, m):
    g, x, _ = xgcd(a % m, m)
    if g != 1:
        raise ValueError("not invertible")
    return x % m


def legendre(a, p):
    """Legendre symbol (a/p) for odd prime p, values in {-1, 0, 1}."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def crt_pair(r1, m1, r2, m2):
    g, x, _ = xgcd(m1, m2)
    if (r2 - r1) % g != 0:
        raise ValueError("incompatible congruences")
    lcm = m1 // g * m2
    return (r1 + (r2 - r1) // g * x % (m2 // g) * m1) % lcm, lcm


def sqrt_exact(n):
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None
