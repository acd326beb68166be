"""Finite quadratic forms on finite abelian groups, with exact values.

A form is stored by a generator presentation: the group is the direct sum
of Z/orders[i], the quadratic value q lives in Q/2Z (kept in [0, 2)) and
the pairing b lives in Q/Z (kept in [0, 1)). The value matrix holds q on
the diagonal and b off it. Gauss sums, Jordan splitting, subquotients and
the isomorphism search all work on this single representation.
"""

import cmath
import math
from fractions import Fraction
from itertools import product

from .errors import (
    BadCongruence,
    BadShape,
    CapExceeded,
    Degenerate,
    NonWitt,
    NotIsotropic,
    NotSubgroup,
    Unsupported,
)
from .intmat import (
    det_bareiss,
    hnf_rows,
    inv_mod,
    inverse_fraction,
    mat_mul,
    prime_factors,
    right_kernel_int,
    snf_with_transforms,
    solve_int,
    transpose,
    val_p,
)


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _exact_int_mat(m):
    out = []
    for row in m:
        line = []
        for x in row:
            f = _frac(x)
            if f.denominator != 1:
                return None
            line.append(int(f))
        out.append(line)
    return out


class FiniteQuadraticForm:
    """Quadratic form q: A -> Q/2Z on A = (+) Z/orders[i]."""

    def __init__(self, orders, values, gens_in_lattice=None):
        orders = tuple(int(d) for d in orders)
        if any(d < 2 for d in orders):
            raise BadShape("generator orders must be at least 2")
        k = len(orders)
        if len(values) != k or any(len(r) != k for r in values):
            raise BadShape("value matrix must be %d x %d" % (k, k))
        vals = [[_frac(values[i][j]) for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(k):
                if i == j:
                    vals[i][j] %= 2
                else:
                    vals[i][j] %= 1
        for i in range(k):
            for j in range(i):
                if vals[i][j] != vals[j][i]:
                    raise BadShape("value matrix must be symmetric")
        for i in range(k):
            d, q = orders[i], vals[i][i]
            if (d * q).denominator != 1 or (d * d * q) % 2 != 0:
                raise BadShape("q value %s invalid for a generator of order %d" % (q, d))
            for j in range(k):
                if i != j and (d * vals[i][j]).denominator != 1:
                    raise BadShape("pairing %s invalid for order %d" % (vals[i][j], d))
        self.orders = orders
        self.values = tuple(tuple(r) for r in vals)
        if gens_in_lattice is not None:
            gens_in_lattice = tuple(
                tuple(_frac(x) for x in row) for row in gens_in_lattice
            )
            if len(gens_in_lattice) != k:
                raise BadShape("one lattice vector per generator required")
        self.gens_in_lattice = gens_in_lattice
        self._canonical = None

    @property
    def num_gens(self):
        return len(self.orders)

    @property
    def group_order(self):
        n = 1
        for d in self.orders:
            n *= d
        return n

    @property
    def is_trivial(self):
        return not self.orders

    @property
    def invariant_factors(self):
        return canonical_form(self).orders

    def q_of(self, coords):
        v = self.values
        s = Fraction(0)
        k = self.num_gens
        for i in range(k):
            ci = coords[i]
            if ci:
                s += ci * ci * v[i][i]
                for j in range(i + 1, k):
                    if coords[j]:
                        s += 2 * ci * coords[j] * v[i][j]
        return s % 2

    def b_of(self, x, y):
        v = self.values
        s = Fraction(0)
        for i in range(self.num_gens):
            if x[i]:
                for j in range(self.num_gens):
                    if y[j]:
                        s += x[i] * y[j] * v[i][j]
        return s % 1

    def element_order(self, coords):
        out = 1
        for d, c in zip(self.orders, coords):
            c %= d
            out = math.lcm(out, d // math.gcd(d, c))
        return out

    def elements(self):
        return product(*[range(d) for d in self.orders])

    def reduce(self, coords):
        return tuple(c % d for c, d in zip(coords, self.orders))

    def __eq__(self, other):
        return (
            isinstance(other, FiniteQuadraticForm)
            and self.orders == other.orders
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.orders, self.values))

    def __repr__(self):
        return "FiniteQuadraticForm(orders=%s)" % (self.orders,)


def trivial_form():
    return FiniteQuadraticForm((), ())


def discriminant_form(lat):
    """Dual quotient of an even lattice with its induced form.

    Generators come with rational lifts (rows in the coordinates of lat),
    which overlattice and coordinate routines rely on.
    """
    n = lat.rank
    if n == 0:
        return trivial_form()
    d, u, v = snf_with_transforms([list(r) for r in lat.gram])
    kept = [i for i in range(n) if d[i][i] > 1]
    gens = []
    for i in kept:
        gens.append([Fraction(u[i][j], d[i][i]) for j in range(n)])
    g = lat.gram
    vals = []
    for a in range(len(kept)):
        row = []
        for b in range(len(kept)):
            s = Fraction(0)
            for i in range(n):
                for j in range(n):
                    s += gens[a][i] * g[i][j] * gens[b][j]
            row.append(s % 2 if a == b else s % 1)
        vals.append(row)
    orders = tuple(d[i][i] for i in kept)
    return FiniteQuadraticForm(orders, vals, gens_in_lattice=gens)


def direct_sum_fqf(f1, f2):
    k1, k2 = f1.num_gens, f2.num_gens
    vals = [[Fraction(0)] * (k1 + k2) for _ in range(k1 + k2)]
    for i in range(k1):
        for j in range(k1):
            vals[i][j] = f1.values[i][j]
    for i in range(k2):
        for j in range(k2):
            vals[k1 + i][k1 + j] = f2.values[i][j]
    return FiniteQuadraticForm(f1.orders + f2.orders, vals)


def negate_fqf(f):
    k = f.num_gens
    vals = [
        [(-f.values[i][j]) % (2 if i == j else 1) for j in range(k)]
        for i in range(k)
    ]
    return FiniteQuadraticForm(f.orders, vals, gens_in_lattice=f.gens_in_lattice)


def canonical_with_maps(f):
    """Invariant-factor presentation plus coordinate dictionaries.

    Returns (canonical, old_to_new, new_to_old): old_to_new[i] gives the
    coordinates of original generator i in the canonical generators, and
    new_to_old[j] the coordinates of canonical generator j in the original
    ones.
    """
    k = f.num_gens
    if k == 0:
        return f, [], []
    dmat = [[f.orders[i] if i == j else 0 for j in range(k)] for i in range(k)]
    d, u, v = snf_with_transforms(dmat)
    uinv = _exact_int_mat(inverse_fraction(u))
    assert uinv is not None
    kept = [j for j in range(k) if d[j][j] > 1]
    qp = []
    for a in range(k):
        row = []
        for b in range(k):
            s = Fraction(0)
            for i in range(k):
                ci = uinv[i][a]
                if ci:
                    for j in range(k):
                        if uinv[j][b]:
                            s += ci * uinv[j][b] * f.values[i][j]
            row.append(s)
        qp.append(row)
    for j in range(k):
        if j not in kept:
            assert qp[j][j] % 2 == 0
            assert all(qp[j][t] % 1 == 0 for t in range(k) if t != j)
    orders = tuple(d[j][j] for j in kept)
    vals = [
        [qp[a][b] % (2 if a == b else 1) for b in kept]
        for a in kept
    ]
    gens = None
    if f.gens_in_lattice is not None:
        n = len(f.gens_in_lattice[0]) if f.gens_in_lattice else 0
        gens = []
        for j in kept:
            row = [Fraction(0)] * n
            for i in range(k):
                if uinv[i][j]:
                    for t in range(n):
                        row[t] += uinv[i][j] * f.gens_in_lattice[i][t]
            gens.append(row)
    can = FiniteQuadraticForm(orders, vals, gens_in_lattice=gens)
    old_to_new = [
        [u[j][i] % d[j][j] for j in kept] for i in range(k)
    ]
    new_to_old = [
        [uinv[i][j] % f.orders[i] for i in range(k)] for j in kept
    ]
    return can, old_to_new, new_to_old


def canonical_form(f):
    if f._canonical is None:
        f._canonical = canonical_with_maps(f)[0]
    return f._canonical


def min_generators(f):
    return len(canonical_form(f).orders)


def p_part_with_coords(f, p):
    """Subform on the p-torsion, with its generators in f coordinates."""
    kept = [i for i in range(f.num_gens) if f.orders[i] % p == 0]
    coords = []
    orders = []
    for i in kept:
        a = val_p(f.orders[i], p)
        m = f.orders[i] // p**a
        row = [0] * f.num_gens
        row[i] = m
        coords.append(row)
        orders.append(p**a)
    vals = []
    for a in range(len(kept)):
        row = []
        for b in range(len(kept)):
            if a == b:
                row.append(f.q_of(coords[a]))
            else:
                row.append(f.b_of(coords[a], coords[b]))
        vals.append(row)
    gens = None
    if f.gens_in_lattice is not None:
        gens = []
        for a in range(len(kept)):
            i = kept[a]
            mult = coords[a][i]
            gens.append([mult * x for x in f.gens_in_lattice[i]])
    return FiniteQuadraticForm(orders, vals, gens_in_lattice=gens), coords


def p_part(f, p):
    return p_part_with_coords(f, p)[0]


def milgram_signature(f, cap=1 << 22):
    """Signature mod 8 read off the Gauss sum of the form.

    The q values over the whole group are tallied exactly as integers over
    a common denominator; only the final phase recognition is numeric, with
    a certified margin. Raises NonWitt when the sum does not land on any of
    the eight admissible phases.
    """
    n = f.group_order
    if n > cap:
        raise CapExceeded("group order %d exceeds cap %d" % (n, cap))
    k = f.num_gens
    if k == 0:
        return 0
    m = 1
    for i in range(k):
        for j in range(k):
            m = math.lcm(m, f.values[i][j].denominator)
    twom = 2 * m
    qint = [int(f.values[i][i] * m) % twom for i in range(k)]
    twob = [
        [int(2 * f.values[i][j] * m) % twom for j in range(k)]
        for i in range(k)
    ]
    counts = {}
    orders = f.orders
    coords = [0] * k
    qcur = 0
    t = [0] * k

    def add_gen(l):
        nonlocal qcur
        qcur = (qcur + qint[l] + t[l]) % twom
        row = twob[l]
        for j in range(k):
            t[j] = (t[j] + row[j]) % twom

    counts[0] = 1
    for _ in range(n - 1):
        i = k - 1
        while coords[i] == orders[i] - 1:
            coords[i] = 0
            add_gen(i)
            i -= 1
        coords[i] += 1
        add_gen(i)
        counts[qcur] = counts.get(qcur, 0) + 1
    total = sum(counts.values())
    assert total == n
    s = sum(c * cmath.exp(1j * math.pi * r / m) for r, c in counts.items())
    target = math.sqrt(n)
    for sig in range(8):
        z = target * cmath.exp(1j * math.pi * sig / 4)
        if abs(s - z) < 0.35 * target:
            return sig
    raise NonWitt("Gauss sum %s does not match any admissible phase" % s)


def subgroup_matrix(f, gens):
    """Canonical lower-triangular matrix whose row span mod relations is
    the subgroup generated by gens (coordinate rows)."""
    k = f.num_gens
    rows = [list(g) for g in gens]
    for i in range(k):
        rel = [0] * k
        rel[i] = f.orders[i]
        rows.append(rel)
    return hnf_rows(rows, k)


def subgroup_order(f, mat):
    det = 1
    for i in range(len(mat)):
        det *= mat[i][i]
    return f.group_order // abs(det)


def subgroup_contains(f, mat, coords):
    return solve_int(transpose(mat), list(coords)) is not None


def subgroup_gens(f, mat):
    out = []
    for row in mat:
        r = f.reduce(row)
        if any(r):
            out.append(list(r))
    return out


def perp_subgroup(f, gens):
    """Canonical matrix of everything pairing integrally with the gens."""
    k = f.num_gens
    cons = []
    mods = []
    for a in gens:
        beta = [f.b_of(_unit(k, j), a) for j in range(k)]
        ma = 1
        for x in beta:
            ma = math.lcm(ma, x.denominator)
        cons.append([int(x * ma) for x in beta])
        mods.append(ma)
    if not cons:
        return subgroup_matrix(f, [list(_unit(k, j)) for j in range(k)])
    kk = len(cons)
    amat = []
    for r in range(kk):
        row = cons[r] + [0] * kk
        row[k + r] = mods[r]
        amat.append(row)
    sols = right_kernel_int(amat)
    xs = [s[:k] for s in sols]
    return subgroup_matrix(f, xs)


def _unit(k, j):
    row = [0] * k
    row[j] = 1
    return tuple(row)


def form_on_subgroup(f, gens):
    """Form restricted to a subgroup; returns (form, generator coords)."""
    k = f.num_gens
    if k == 0:
        return trivial_form(), []
    bmat = gens if _is_subgroup_matrix(gens, k) else subgroup_matrix(f, gens)
    binv = inverse_fraction(bmat)
    dmat = [[f.orders[i] if i == j else 0 for j in range(k)] for i in range(k)]
    c = _exact_int_mat(mat_mul(dmat, binv))
    assert c is not None
    d, u, v = snf_with_transforms(c)
    vinv = _exact_int_mat(inverse_fraction(v))
    assert vinv is not None
    kept = [i for i in range(k) if d[i][i] > 1]
    coords = []
    for i in kept:
        w = [sum(vinv[i][t] * bmat[t][j] for t in range(k)) for j in range(k)]
        coords.append(list(f.reduce(w)))
    orders = tuple(d[i][i] for i in kept)
    vals = []
    for a in range(len(kept)):
        row = []
        for b in range(len(kept)):
            if a == b:
                row.append(f.q_of(coords[a]))
            else:
                row.append(f.b_of(coords[a], coords[b]))
        vals.append(row)
    gens_lat = None
    if f.gens_in_lattice is not None:
        n = len(f.gens_in_lattice[0]) if f.gens_in_lattice else 0
        gens_lat = []
        for crow in coords:
            vec = [Fraction(0)] * n
            for i in range(k):
                if crow[i]:
                    for t in range(n):
                        vec[t] += crow[i] * f.gens_in_lattice[i][t]
            gens_lat.append(vec)
    return FiniteQuadraticForm(orders, vals, gens_in_lattice=gens_lat), coords


def _is_subgroup_matrix(rows, k):
    if len(rows) != k:
        return False
    for i, r in enumerate(rows):
        if len(r) != k or r[i] <= 0:
            return False
        if any(r[j] != 0 for j in range(i + 1, k)):
            return False
    return True


class QuotientMap:
    """Coordinates for a quotient T/S of subgroups of a form."""

    def __init__(self, f, tmat, tinv, v, orders, kept, gens_in_ambient):
        self.ambient = f
        self.tmat = tmat
        self._tinv = tinv
        self._v = v
        self.orders = orders
        self._kept = kept
        self.gens_in_ambient = gens_in_ambient

    def to_coords(self, coords):
        k = self.ambient.num_gens
        w = [sum(_frac(coords[t]) * self._tinv[t][j] for t in range(k)) for j in range(k)]
        y = [sum(w[t] * self._v[t][j] for t in range(k)) for j in range(k)]
        out = []
        for pos, j in enumerate(self._kept):
            val = y[j]
            if val.denominator != 1:
                raise NotSubgroup("element is not in the numerator subgroup")
            out.append(int(val) % self.orders[pos])
        for j in range(k):
            if j not in self._kept and y[j].denominator != 1:
                raise NotSubgroup("element is not in the numerator subgroup")
        return tuple(out)


def quotient_form(f, tmat, smat):
    """Form induced on T/S; S must be isotropic and pair trivially with T.

    Returns (form, QuotientMap).
    """
    k = f.num_gens
    tinv = inverse_fraction(tmat)
    c = _exact_int_mat(mat_mul(smat, tinv))
    if c is None:
        raise NotSubgroup("denominator subgroup is not inside the numerator")
    sgens = subgroup_gens(f, smat)
    tgens = subgroup_gens(f, tmat)
    for s in sgens:
        if f.q_of(s) % 2 != 0:
            raise NotIsotropic("q does not vanish on the denominator subgroup")
        for t in tgens:
            if f.b_of(t, s) != 0:
                raise NotIsotropic("denominator pairs nontrivially with numerator")
    d, u, v = snf_with_transforms(c)
    vinv = _exact_int_mat(inverse_fraction(v))
    assert vinv is not None
    kept = [i for i in range(k) if d[i][i] > 1]
    coords = []
    for i in kept:
        w = [sum(vinv[i][t] * tmat[t][j] for t in range(k)) for j in range(k)]
        coords.append(list(f.reduce(w)))
    orders = tuple(d[i][i] for i in kept)
    vals = []
    for a in range(len(kept)):
        row = []
        for b in range(len(kept)):
            if a == b:
                row.append(f.q_of(coords[a]))
            else:
                row.append(f.b_of(coords[a], coords[b]))
        vals.append(row)
    vfrac = [[_frac(v[i][j]) for j in range(k)] for i in range(k)]
    qmap = QuotientMap(f, tmat, tinv, vfrac, orders, kept, coords)
    return FiniteQuadraticForm(orders, vals), qmap


def fqf_coords_of(f, vector):
    """Coordinates in f of a rational vector lying in the dual lattice."""
    if f.gens_in_lattice is None:
        raise Unsupported("form carries no lattice generators")
    k = f.num_gens
    n = len(vector)
    vec = [_frac(x) for x in vector]
    den = 1
    for row in f.gens_in_lattice:
        for x in row:
            den = math.lcm(den, x.denominator)
    for x in vec:
        den = math.lcm(den, x.denominator)
    rows = []
    for grow in f.gens_in_lattice:
        rows.append([int(x * den) for x in grow])
    for i in range(n):
        r = [0] * n
        r[i] = den
        rows.append(r)
    target = [int(x * den) for x in vec]
    sol = solve_int(transpose(rows), target)
    if sol is None:
        raise BadCongruence("vector is not in the dual lattice")
    return tuple(sol[i] % f.orders[i] for i in range(k))


def splits_unit_block(f):
    """Whether the scale-2 part contains a one-generator unit summand.

    Detected through order-2 elements with half-integral q value.
    """
    idx = [i for i in range(f.num_gens) if f.orders[i] % 2 == 0]
    if len(idx) > 24:
        raise CapExceeded("too much 2-torsion to enumerate")
    for bits in product((0, 1), repeat=len(idx)):
        if not any(bits):
            continue
        coords = [0] * f.num_gens
        for b, i in zip(bits, idx):
            coords[i] = b * (f.orders[i] // 2)
        if f.q_of(coords) in (Fraction(1, 2), Fraction(3, 2)):
            return True
    return False


def odd_jordan(f, p):
    """Greedy one-generator splitting of the p-part, p odd.

    Returns blocks as (scale, q value) pairs with scale a power of p,
    largest scale first.
    """
    cur = p_part(canonical_form(f), p)
    blocks = []
    while cur.num_gens:
        top = cur.orders[-1]
        found = None
        for coords in cur.elements():
            if cur.element_order(coords) != top:
                continue
            q = cur.q_of(coords)
            if q != 0 and q.denominator == top:
                found = coords
                break
        if found is None:
            raise Degenerate("no generator of exact top scale; form is degenerate")
        blocks.append((top, cur.q_of(found)))
        perp = perp_subgroup(cur, [list(found)])
        cur, _ = form_on_subgroup(cur, perp)
    return blocks


def _reference_histogram(form):
    hist = {}
    for c in form.elements():
        q = form.q_of(c)
        hist[q] = hist.get(q, 0) + 1
    return hist


def two_adic_jordan(f):
    """Greedy splitting of the 2-part into one-generator and even blocks.

    Blocks are ('q', scale, value) for one-generator pieces and ('u', scale)
    or ('v', scale) for the two even types, recognized by their exact
    q-value histograms.
    """
    cur = p_part(canonical_form(f), 2)
    blocks = []
    while cur.num_gens:
        top = cur.orders[-1]
        found = None
        for coords in cur.elements():
            if cur.element_order(coords) != top:
                continue
            q = cur.q_of(coords)
            if q != 0 and q.denominator == top:
                found = coords
                break
        if found is not None:
            blocks.append(("q", top, cur.q_of(found)))
            perp = perp_subgroup(cur, [list(found)])
            cur, _ = form_on_subgroup(cur, perp)
            continue
        tops = [c for c in cur.elements() if cur.element_order(c) == top]
        pair = None
        for x in tops:
            for y in tops:
                if cur.b_of(x, y).denominator == top:
                    pair = (x, y)
                    break
            if pair:
                break
        if pair is None:
            raise Degenerate("no exact pairing at top scale; form is degenerate")
        span, _ = form_on_subgroup(cur, [list(pair[0]), list(pair[1])])
        assert span.orders == (top, top)
        hist = _reference_histogram(span)
        ref_u = FiniteQuadraticForm(
            (top, top),
            [[Fraction(0), Fraction(1, top)], [Fraction(1, top), Fraction(0)]],
        )
        ref_v = FiniteQuadraticForm(
            (top, top),
            [[Fraction(2, top), Fraction(1, top)], [Fraction(1, top), Fraction(2, top)]],
        )
        hu, hv = _reference_histogram(ref_u), _reference_histogram(ref_v)
        assert hu != hv
        if hist == hu:
            blocks.append(("u", top))
        elif hist == hv:
            blocks.append(("v", top))
        else:
            raise Unsupported("even block matches neither reference histogram")
        perp = perp_subgroup(cur, [list(pair[0]), list(pair[1])])
        cur, _ = form_on_subgroup(cur, perp)
    return blocks


def _q_fingerprint(f, cap=200000):
    if f.group_order > cap:
        return None
    hist = {}
    for c in f.elements():
        q = f.q_of(c)
        hist[q] = hist.get(q, 0) + 1
    return tuple(sorted(hist.items()))


def _is_even_two_elementary(f):
    return all(d == 2 for d in f.orders) and all(
        v.denominator == 1 for row in f.values for v in row
    )


def _inv_mod2(mat):
    k = len(mat)
    a = []
    for i in range(k):
        a.append([mat[i][j] % 2 for j in range(k)] + [1 if j == i else 0 for j in range(k)])
    row = 0
    for col in range(k):
        piv = next((r for r in range(row, k) if a[r][col]), None)
        if piv is None:
            return None
        a[row], a[piv] = a[piv], a[row]
        for r in range(k):
            if r != row and a[r][col]:
                a[r] = [(x + y) % 2 for x, y in zip(a[r], a[row])]
        row += 1
    return [r[k:] for r in a]


def _symplectic_pairs(f):
    """Hyperbolic splitting of an even two-elementary form.

    Returns a list of ((x, y), kind) with kind 'u' or 'v'; pairs of the
    first kind are always extracted while any nonzero q = 0 element exists,
    so the kind sequence is canonical.
    """
    k = f.num_gens
    basis = [list(_unit(k, j)) for j in range(k)]
    pairs = []
    half = Fraction(1, 2)
    while basis:
        m = len(basis)
        span = []
        for bits in product((0, 1), repeat=m):
            if not any(bits):
                continue
            vec = [0] * k
            for t in range(m):
                if bits[t]:
                    vec = [(a + b) % 2 for a, b in zip(vec, basis[t])]
            span.append(vec)
        x = next((v for v in span if f.q_of(v) % 2 == 0), None)
        kind = "u"
        if x is None:
            x = span[0]
            kind = "v"
        y = next((v for v in span if f.b_of(x, v) == half), None)
        if y is None:
            raise Degenerate("no hyperbolic partner; form is degenerate")
        if kind == "u" and f.q_of(y) % 2 != 0:
            y = [(a + b) % 2 for a, b in zip(x, y)]
        pairs.append(((list(x), list(y)), kind))
        new_basis = []
        for v in basis:
            w = list(v)
            if f.b_of(w, y) == half:
                w = [(a + b) % 2 for a, b in zip(w, x)]
            if f.b_of(w, x) == half:
                w = [(a + b) % 2 for a, b in zip(w, y)]
            if any(w):
                new_basis.append(w)
        # the adjusted vectors may have become dependent; thin to a basis mod 2
        thin = []
        seen = []
        for w in new_basis:
            cand = seen + [w]
            if _rank_mod2(cand) == len(cand):
                seen = cand
                thin.append(w)
        basis = thin
    return pairs


def _rank_mod2(rows):
    a = [list(r) for r in rows]
    rank = 0
    cols = len(a[0]) if a else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(a)) if a[r][col] % 2), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][col] % 2:
                a[r] = [(x + y) % 2 for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def _two_elementary_iso(p1, p2):
    s1 = _symplectic_pairs(p1)
    s2 = _symplectic_pairs(p2)
    kinds1 = [kind for _, kind in s1]
    kinds2 = [kind for _, kind in s2]
    if kinds1 != kinds2:
        return None
    b1 = []
    b2 = []
    for (x, y), _ in s1:
        b1 += [x, y]
    for (x, y), _ in s2:
        b2 += [x, y]
    inv = _inv_mod2(transpose(b1))
    if inv is None:
        raise Degenerate("splitting vectors are dependent")
    k = p1.num_gens
    images = []
    for i in range(k):
        coeffs = [inv[t][i] % 2 for t in range(k)]
        img = [0] * p2.num_gens
        for t in range(k):
            if coeffs[t]:
                img = [(a + b) % 2 for a, b in zip(img, b2[t])]
        images.append(img)
    return images


def _p_group_backtrack(p1, p2, budget):
    k = p1.num_gens
    if k == 0:
        return []
    cands = {}
    order_index = list(range(k - 1, -1, -1))
    needed = {(p1.orders[i], p1.values[i][i]) for i in range(k)}
    for c in p2.elements():
        key = (p2.element_order(c), p2.q_of(c))
        if key in needed:
            cands.setdefault(key, []).append(list(c))
    chosen = [None] * k

    def dfs(pos):
        if pos == len(order_index):
            mat = subgroup_matrix(p2, [chosen[i] for i in range(k)])
            return subgroup_order(p2, mat) == p2.group_order
        i = order_index[pos]
        key = (p1.orders[i], p1.values[i][i])
        for c in cands.get(key, []):
            budget[0] -= 1
            if budget[0] < 0:
                raise CapExceeded("isomorphism search budget exhausted")
            ok = True
            for pos2 in range(pos):
                j = order_index[pos2]
                if p2.b_of(c, chosen[j]) != p1.values[i][j]:
                    ok = False
                    break
            if not ok:
                continue
            chosen[i] = c
            if dfs(pos + 1):
                return True
            chosen[i] = None
        return False

    if dfs(0):
        return [list(c) for c in chosen]
    return None


def _p_group_iso(p1, p2, budget):
    if p1.orders != p2.orders:
        return None
    if p1.values == p2.values:
        return [list(_unit(p1.num_gens, i)) for i in range(p1.num_gens)]
    f1 = _q_fingerprint(p1)
    f2 = _q_fingerprint(p2)
    if f1 is not None and f2 is not None and f1 != f2:
        return None
    if _is_even_two_elementary(p1) and _is_even_two_elementary(p2):
        return _two_elementary_iso(p1, p2)
    return _p_group_backtrack(p1, p2, budget)


def fqf_isomorphic(f1, f2, cap=2_000_000):
    """Explicit isomorphism between two forms, or None.

    The result maps generator i of f1 to the coordinate vector result[i]
    in f2. Splits into p-parts, solves each one, and recombines.
    """
    c1, old_to_new1, _ = canonical_with_maps(f1)
    c2, _, new_to_old2 = canonical_with_maps(f2)
    if c1.orders != c2.orders:
        return None
    k = len(c1.orders)
    if k == 0:
        images = [[0] * f2.num_gens for _ in range(f1.num_gens)]
        assert verify_fqf_iso(f1, f2, images)
        return images
    if c1.values == c2.values:
        can_images = [list(_unit(k, i)) for i in range(k)]
    else:
        g1 = _q_fingerprint(c1)
        g2 = _q_fingerprint(c2)
        if g1 is not None and g2 is not None and g1 != g2:
            return None
        budget = [cap]
        primes = list(prime_factors(c1.group_order))
        parts = {}
        for p in primes:
            p1, coords1 = p_part_with_coords(c1, p)
            p2, coords2 = p_part_with_coords(c2, p)
            phi = _p_group_iso(p1, p2, budget)
            if phi is None:
                return None
            parts[p] = (coords1, coords2, phi)
        can_images = []
        for i in range(k):
            d = c1.orders[i]
            img = [0] * k
            for p in primes:
                a = val_p(d, p)
                if a == 0:
                    continue
                coords1, coords2, phi = parts[p]
                pos = next(
                    t for t, row in enumerate(coords1)
                    if row[i] != 0 and all(row[s] == 0 for s in range(k) if s != i)
                )
                lam = inv_mod(d // p**a, p**a)
                image_p = phi[pos]
                for t, mult in enumerate(image_p):
                    if mult:
                        for s in range(k):
                            img[s] += lam * mult * coords2[t][s]
            can_images.append([x % c2.orders[s] for s, x in enumerate(img)])
    # canonical images back to the original generators of both forms
    orig_can = []
    for j in range(k):
        vec = [0] * f2.num_gens
        for t, mult in enumerate(can_images[j]):
            if mult:
                for s in range(f2.num_gens):
                    vec[s] += mult * new_to_old2[t][s]
        orig_can.append([x % f2.orders[s] for s, x in enumerate(vec)])
    images = []
    for i0 in range(f1.num_gens):
        vec = [0] * f2.num_gens
        for j, mult in enumerate(old_to_new1[i0]):
            if mult:
                for s in range(f2.num_gens):
                    vec[s] += mult * orig_can[j][s]
        images.append([x % f2.orders[s] for s, x in enumerate(vec)])
    assert verify_fqf_iso(f1, f2, images)
    return images


def verify_fqf_iso(f1, f2, images):
    """Full check that generator images define an isomorphism of forms."""
    if f1.group_order != f2.group_order:
        return False
    if len(images) != f1.num_gens:
        return False
    for i in range(f1.num_gens):
        img = images[i]
        if len(img) != f2.num_gens:
            return False
        if f1.orders[i] % f2.element_order(img) != 0:
            return False
        if f2.q_of(img) != f1.values[i][i]:
            return False
        for j in range(i):
            if f2.b_of(img, images[j]) != f1.values[i][j]:
                return False
    if f1.num_gens == 0:
        return True
    mat = subgroup_matrix(f2, [list(im) for im in images])
    return subgroup_order(f2, mat) == f2.group_order
