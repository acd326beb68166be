"""Even integral lattices with exact arithmetic.

A Lattice wraps a nondegenerate symmetric integer Gram matrix with even
diagonal. All derived data (determinant, signature) is computed exactly and
cached on the instance. Degenerate restrictions are first class citizens via
DegenerateQuadraticModule rather than errors, because orthogonal complements
inside hyperbolic pieces routinely produce them.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadShape,
    Degenerate,
    DependentVectors,
    NotIsotropic,
    NotSymmetric,
    NotEvenGram,
    UnknownTag,
    ZeroScale,
)
from .intmat import (
    det_bareiss,
    frac_rows_span_basis,
    inverse_fraction,
    mat_mul,
    rational_rank,
    right_kernel_int,
    snf_with_transforms,
    sqrt_exact,
)


def _int_entries(m):
    out = []
    for row in m:
        line = []
        for x in row:
            f = Fraction(x)
            assert f.denominator == 1
            line.append(int(f))
        out.append(line)
    return out


@dataclass(frozen=True)
class SnfResult:
    d: tuple
    u: tuple
    v: tuple

    @property
    def diagonal(self):
        n = min(len(self.d), len(self.d[0]) if self.d else 0)
        return tuple(self.d[i][i] for i in range(n))


def snf(matrix):
    """Public Smith form wrapper: u * m * v = d with the deterministic pivot."""
    _check_int_matrix(matrix)
    d, u, v = snf_with_transforms([list(r) for r in matrix])
    freeze = lambda m: tuple(tuple(r) for r in m)
    return SnfResult(freeze(d), freeze(u), freeze(v))


def _check_int_matrix(m):
    if not isinstance(m, (list, tuple)):
        raise BadShape("matrix must be a list of rows")
    width = None
    for r in m:
        if not isinstance(r, (list, tuple)):
            raise BadShape("matrix must be a list of rows")
        if width is None:
            width = len(r)
        elif len(r) != width:
            raise BadShape("ragged matrix")
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise BadShape("entries must be integers")


def rational_signature(gram):
    """(positive, negative, zero) inertia of a symmetric rational matrix.

    Symmetric elimination over Q. A nonzero diagonal entry contributes its
    sign and is projected out; failing that, a nonzero off-diagonal pair
    spans a hyperbolic plane contributing (1,1), and both indices are
    projected out together.
    """
    n = len(gram)
    g = {}
    live = list(range(n))
    for i in range(n):
        for j in range(n):
            g[(i, j)] = Fraction(gram[i][j])
    pos = neg = 0
    while live:
        piv = next((i for i in live if g[(i, i)] != 0), None)
        if piv is not None:
            p = g[(piv, piv)]
            if p > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in live if i != piv]
            col = {i: g[(i, piv)] for i in rest}
            for u in rest:
                cu = col[u]
                if cu:
                    for w in rest:
                        g[(u, w)] -= cu * col[w] / p
            live = rest
            continue
        pair = None
        for a_idx in range(len(live)):
            for b_idx in range(a_idx + 1, len(live)):
                if g[(live[a_idx], live[b_idx])] != 0:
                    pair = (live[a_idx], live[b_idx])
                    break
            if pair:
                break
        if pair is None:
            break  # remaining block is zero: the radical
        i, j = pair
        b = g[(i, j)]
        pos += 1
        neg += 1
        rest = [t for t in live if t not in (i, j)]
        ci = {u: g[(u, i)] for u in rest}
        cj = {u: g[(u, j)] for u in rest}
        for u in rest:
            for w in rest:
                g[(u, w)] -= (ci[u] * cj[w] + cj[u] * ci[w]) / b
        live = rest
    return pos, neg, len(live)


class DegenerateQuadraticModule:
    """Restriction of an even form whose Gram matrix has a radical."""

    def __init__(self, gram, radical_rank):
        self.gram = tuple(tuple(r) for r in gram)
        self.radical_rank = radical_rank

    @property
    def rank(self):
        return len(self.gram)

    def __repr__(self):
        return "DegenerateQuadraticModule(rank=%d, radical=%d)" % (
            self.rank,
            self.radical_rank,
        )


class Lattice:
    """Even nondegenerate integral lattice given by its Gram matrix."""

    def __init__(self, gram):
        _check_int_matrix(gram)
        g = [list(r) for r in gram]
        n = len(g)
        if any(len(r) != n for r in g):
            raise BadShape("gram must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise NotSymmetric("gram must be symmetric")
        if any(g[i][i] % 2 for i in range(n)):
            raise NotEvenGram("diagonal must be even")
        det = det_bareiss(g)
        if n > 0 and det == 0:
            raise Degenerate("gram is singular")
        self.gram = tuple(tuple(r) for r in g)
        self.rank = n
        self.det = det
        self._signature = None

    @property
    def discriminant_group_order(self):
        return abs(self.det)

    @property
    def signature(self):
        if self._signature is None:
            pos, neg, zero = rational_signature(self.gram)
            assert zero == 0
            self._signature = (pos, neg)
        return self._signature

    def bilinear(self, x, y):
        g = self.gram
        return sum(x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))

    def norm(self, x):
        return self.bilinear(x, x)

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return "Lattice(rank=%d, det=%d, sig=%s)" % (self.rank, self.det, self.signature)


def lattice_from_gram(rows):
    return Lattice(rows)


def direct_sum(a, b):
    n, m = a.rank, b.rank
    g = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            g[i][j] = a.gram[i][j]
    for i in range(m):
        for j in range(m):
            g[n + i][n + j] = b.gram[i][j]
    return Lattice(g)


def rescale(lat, s):
    if not isinstance(s, int) or s == 0:
        raise ZeroScale("scale must be a nonzero integer")
    return Lattice([[s * x for x in row] for row in lat.gram])


def gram_of_rows(rows, gram):
    """Gram matrix of the given (possibly rational) row vectors."""
    k = len(rows)
    n = len(gram)
    out = []
    for i in range(k):
        line = []
        gi = [sum(Fraction(rows[i][t]) * gram[t][j] for t in range(n)) for j in range(n)]
        for j in range(k):
            line.append(sum(gi[t] * Fraction(rows[j][t]) for t in range(n)))
        out.append(line)
    return out


def sublattice_from_gram_change(lat, rows):
    """Restrict the form to the span of integer rows (a new abstract lattice)."""
    _check_int_matrix(rows)
    if rows and len(rows[0]) != lat.rank:
        raise BadShape("row length must equal the ambient rank")
    if rational_rank(rows) != len(rows):
        raise DependentVectors("rows are dependent")
    g = _int_entries(gram_of_rows(rows, lat.gram))
    pos, neg, zero = rational_signature(g)
    if zero:
        return DegenerateQuadraticModule(g, zero)
    return Lattice(g)


def primitive_closure(lat, rows):
    """Saturation of the span of integer rows inside the lattice.

    Returns (basis_rows, index) where index is the index of the span inside
    its saturation.
    """
    _check_int_matrix(rows)
    if not rows:
        return [], 1
    if len(rows[0]) != lat.rank:
        raise BadShape("row length must equal the ambient rank")
    k = len(rows)
    if rational_rank(rows) != k:
        raise DependentVectors("rows are dependent")
    d, u, v = snf_with_transforms([list(r) for r in rows])
    vinv = [[int(x) for x in row] for row in inverse_fraction(v)]
    basis = [vinv[i] for i in range(k)]
    index = 1
    for i in range(k):
        index *= d[i][i]
    return basis, index


def orthogonal_complement(lat, rows):
    """(basis_rows, module) of everything orthogonal to the given rows.

    The basis is automatically saturated. The module is a Lattice when the
    restricted form is nondegenerate, otherwise a DegenerateQuadraticModule.
    """
    _check_int_matrix(rows)
    n = lat.rank
    if rows and len(rows[0]) != n:
        raise BadShape("row length must equal the ambient rank")
    rg = mat_mul([list(r) for r in rows], [list(r) for r in lat.gram])
    cols = right_kernel_int(rg) if rows else [
        [1 if i == j else 0 for i in range(n)] for j in range(n)
    ]
    basis = [list(c) for c in cols]
    g = _int_entries(gram_of_rows(basis, lat.gram))
    pos, neg, zero = rational_signature(g)
    if zero:
        return basis, DegenerateQuadraticModule(g, zero)
    if not basis:
        return basis, Lattice([])
    return basis, Lattice(g)


def overlattice_from_isotropic(lat, form, gens):
    """Overlattice attached to an isotropic subgroup of the discriminant form.

    gens are coordinate vectors with respect to form's generators, where form
    must be the discriminant form of lat (it carries the rational lifts).
    Returns (overlattice, index, basis_rows) with basis rows rational in the
    coordinates of lat.
    """
    lifts = []
    for c in gens:
        if len(c) != len(form.invariant_factors):
            raise BadShape("coordinate length mismatch")
        row = [Fraction(0)] * lat.rank
        for ci, grow in zip(c, form.gens_in_lattice):
            for j in range(lat.rank):
                row[j] += ci * grow[j]
        lifts.append(row)
    # isotropy: q vanishes mod 2Z and pairings vanish mod Z on the subgroup
    for i, r in enumerate(lifts):
        qv = sum(r[a] * lat.gram[a][b] * r[b] for a in range(lat.rank) for b in range(lat.rank))
        if qv % 2 != 0:
            raise NotIsotropic("generator %d has odd norm" % i)
        for j in range(i):
            bv = sum(lifts[j][a] * lat.gram[a][b] * r[b]
                     for a in range(lat.rank) for b in range(lat.rank))
            if bv.denominator != 1:
                raise NotIsotropic("generators %d,%d pair fractionally" % (j, i))
    basis = frac_rows_span_basis(lifts, lat.rank)
    g = _int_entries(gram_of_rows(basis, lat.gram))
    over = Lattice(g)
    ratio = Fraction(abs(lat.det), abs(over.det))
    assert ratio.denominator == 1
    index = sqrt_exact(int(ratio))
    assert index is not None
    return over, index, basis


_U = [[0, 1], [1, 0]]
_U2 = [[0, 2], [2, 0]]

# Negated E8 Cartan matrix, nodes in the standard Bourbaki order
# (chain 1-3-4-5-6-7-8 with node 2 hanging off node 4).
_E8_EDGES = [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]


def _e8_gram():
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for a, b in _E8_EDGES:
        g[a - 1][b - 1] = 1
        g[b - 1][a - 1] = 1
    return g


def _block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    g = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                g[off + i][off + j] = b[i][j]
        off += k
    return g


def _scaled(g, s):
    return [[s * x for x in row] for row in g]


_TAGS = {}


def _register(gram, *names):
    for nm in names:
        _TAGS[nm] = gram


_register(_U, "U", "u", "hyperbolic")
_register(_U2, "U2", "u2", "U(2)", "u(2)")
_register(_e8_gram(), "E8", "e8")
_register(_scaled(_e8_gram(), 2), "E82", "e82", "E8(2)", "e8(2)")
_register(_block_diag(_U2, _scaled(_e8_gram(), 2)), "M", "m")
_register(_block_diag(_U, _U2, _scaled(_e8_gram(), 2)), "N", "n")
_register(
    _block_diag(_e8_gram(), _e8_gram(), _U, _U, _U),
    "Lambda", "lambda", "K3",
)


def standard_lattice(tag):
    """Fixed lattices by tag: U, U2, E8, E82, M, N, Lambda."""
    if tag not in _TAGS:
        raise UnknownTag("unknown lattice tag %r" % (tag,))
    return Lattice(_TAGS[tag])
