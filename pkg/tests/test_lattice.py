import random
from fractions import Fraction

import pytest

from enrlat.errors import (
    BadShape,
    Degenerate,
    DependentVectors,
    NotEvenGram,
    UnknownTag,
)
from enrlat.fqf import discriminant_form
from enrlat.lattice import (
    Lattice,
    direct_sum,
    gram_of_rows,
    orthogonal_complement,
    overlattice_from_isotropic,
    primitive_closure,
    rational_signature,
    rescale,
    standard_lattice,
    sublattice_from_gram_change,
)


def random_even_lattice(rng, max_rank=5, bound=8, det_cap=40000):
    while True:
        n = rng.randint(1, max_rank)
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2 * rng.randint(-bound // 2, bound // 2)
            for j in range(i + 1, n):
                g[i][j] = g[j][i] = rng.randint(-bound, bound)
        try:
            lat = Lattice(g)
        except Degenerate:
            continue
        if abs(lat.det) <= det_cap:
            return lat


# frozen reference grams, byte for byte

U_GRAM = ((0, 1), (1, 0))
U2_GRAM = ((0, 2), (2, 0))
E8_GRAM = (
    (-2, 0, 1, 0, 0, 0, 0, 0),
    (0, -2, 0, 1, 0, 0, 0, 0),
    (1, 0, -2, 1, 0, 0, 0, 0),
    (0, 1, 1, -2, 1, 0, 0, 0),
    (0, 0, 0, 1, -2, 1, 0, 0),
    (0, 0, 0, 0, 1, -2, 1, 0),
    (0, 0, 0, 0, 0, 1, -2, 1),
    (0, 0, 0, 0, 0, 0, 1, -2),
)


def test_standard_tags_frozen():
    assert standard_lattice("U").gram == U_GRAM
    assert standard_lattice("U2").gram == U2_GRAM
    assert standard_lattice("E8").gram == E8_GRAM
    e82 = standard_lattice("E82")
    assert e82.gram == tuple(tuple(2 * x for x in row) for row in E8_GRAM)


def test_standard_tag_invariants():
    m = standard_lattice("M")
    n = standard_lattice("N")
    lam = standard_lattice("Lambda")
    assert m.rank == 10 and m.signature == (1, 9) and abs(m.det) == 1024
    assert n.rank == 12 and n.signature == (2, 10) and abs(n.det) == 1024
    assert lam.rank == 22 and lam.signature == (3, 19) and abs(lam.det) == 1
    with pytest.raises(UnknownTag):
        standard_lattice("nope")


def test_constructor_rejects_bad_grams():
    with pytest.raises(NotEvenGram):
        Lattice([[1]])
    with pytest.raises(Degenerate):
        Lattice([[2, 2], [2, 2]])
    with pytest.raises(BadShape):
        Lattice([[2, 0]])


def test_det_equals_discriminant_group_order():
    rng = random.Random(41)
    for _ in range(25):
        lat = random_even_lattice(rng)
        form = discriminant_form(lat)
        assert form.group_order == abs(lat.det)


def test_rescale_scales_det_by_power():
    rng = random.Random(43)
    for _ in range(20):
        lat = random_even_lattice(rng, max_rank=4)
        s = rng.choice((2, 3, 5))
        big = rescale(lat, s)
        assert big.det == lat.det * s ** lat.rank
        pos, neg = lat.signature
        assert big.signature == (pos, neg)


def test_signature_of_direct_sum_adds():
    u = standard_lattice("U")
    e8 = standard_lattice("E8")
    both = direct_sum(u, e8)
    assert both.signature == (1, 9)
    assert both.det == u.det * e8.det


def test_primitive_closure_idempotent():
    rng = random.Random(47)
    for _ in range(20):
        lat = random_even_lattice(rng, max_rank=4)
        n = lat.rank
        k = rng.randint(1, n)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)]
        rows = [r for r in rows if any(r)]
        if not rows:
            continue
        try:
            closed, index = primitive_closure(lat, rows)
        except DependentVectors:
            continue
        again, index2 = primitive_closure(lat, [list(r) for r in closed])
        assert index >= 1
        assert index2 == 1
        span1 = sorted(tuple(r) for r in closed)
        span2 = sorted(tuple(r) for r in again)
        assert span1 == span2


def test_scaled_rows_close_to_unit_index():
    lat = standard_lattice("E8")
    rows = [[2, 0, 0, 0, 0, 0, 0, 0], [0, 3, 0, 0, 0, 0, 0, 0]]
    closed, index = primitive_closure(lat, rows)
    assert index == 6
    assert len(closed) == 2


def test_complement_is_saturated():
    rng = random.Random(53)
    n_amb = standard_lattice("N")
    for _ in range(10):
        v = [rng.randint(-2, 2) for _ in range(12)]
        if not any(v):
            continue
        rows, module = orthogonal_complement(n_amb, [v])
        for r in rows:
            assert n_amb.bilinear(r, v) == 0
        _, index = primitive_closure(n_amb, [list(x) for x in rows])
        assert index == 1


def test_complement_of_unimodular_summand():
    n_amb = standard_lattice("N")
    rows, module = orthogonal_complement(
        n_amb, [[1, 0] + [0] * 10, [0, 1] + [0] * 10]
    )
    assert isinstance(module, Lattice)
    assert module.rank == 10
    assert abs(module.det) == 1024
    assert module.signature == (1, 9)


def test_sublattice_from_gram_change():
    e8 = standard_lattice("E8")
    rows = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    sub = sublattice_from_gram_change(e8, rows)
    assert sub.det == e8.det * 2 ** 16


def test_overlattice_recovers_dual_quotient():
    # index f overlattice divides the discriminant order by f^2
    lat = Lattice([[4, 0], [0, 4]])
    form = discriminant_form(lat)
    iso = None
    for coords in form.elements():
        if not any(coords):
            continue
        if form.q_of(coords) % 2 == 0 and form.element_order(coords) == 2:
            iso = coords
            break
    assert iso is not None
    over, index, rows = overlattice_from_isotropic(lat, form, [list(iso)])
    assert index == 2
    assert abs(over.det) * index * index == abs(lat.det)
    for r in rows:
        norm = gram_of_rows([r], [list(x) for x in lat.gram])[0][0]
        assert Fraction(norm) % 2 == 0


def test_rational_signature_handles_zero_diagonal():
    assert rational_signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert rational_signature([[0, 0], [0, 0]]) == (0, 0, 2)
    assert rational_signature([[2, 0], [0, -2]]) == (1, 1, 0)
