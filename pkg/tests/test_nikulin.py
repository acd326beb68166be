import random

import pytest

from enrlat.errors import (
    BadPrime,
    EvenIndex,
    NotTwoGroup,
    StarViolated,
)
from enrlat.fqf import (
    discriminant_form,
    fqf_isomorphic,
    milgram_signature,
    trivial_form,
)
from enrlat.lattice import Lattice, standard_lattice
from enrlat.nikulin import (
    condition_star,
    exists_even_lattice,
    find_embedding_datum,
    index_p_sublattice,
    make_datum,
    transfer_datum_down,
    transfer_datum_up,
    verify_embedding_datum,
)


def random_even_lattice(rng, max_rank=5, bound=8, det_cap=20000):
    from enrlat.errors import Degenerate

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


# ------------------------------------------------------------ existence


def test_exists_on_frozen_positives():
    assert exists_even_lattice((1, 1), trivial_form())
    assert exists_even_lattice((1, 9), discriminant_form(standard_lattice("M")))
    assert exists_even_lattice((2, 10), discriminant_form(standard_lattice("N")))
    assert exists_even_lattice((0, 1), discriminant_form(Lattice([[-2]])))
    assert exists_even_lattice((0, 1), discriminant_form(Lattice([[-6]])))


def test_exists_on_frozen_negatives():
    assert not exists_even_lattice((0, 1), trivial_form())
    assert not exists_even_lattice((1, 0), discriminant_form(Lattice([[-2]])))
    # rank bound: one generator cannot fit in rank zero
    assert not exists_even_lattice((0, 0), discriminant_form(Lattice([[2]])))


def test_exists_self_realization_sweep():
    rng = random.Random(131)
    for _ in range(60):
        lat = random_even_lattice(rng)
        pos, neg = lat.signature
        assert exists_even_lattice((pos, neg), discriminant_form(lat))
        assert not exists_even_lattice((pos + 1, neg), discriminant_form(lat))


def test_exists_rejects_negative_signature_entries():
    assert not exists_even_lattice((-1, 1), trivial_form())


def test_unimodular_iff_rule():
    """Trivial form realized exactly when the signature difference is 0 mod 8."""
    for pos in range(0, 19):
        for neg in range(0, 19):
            got = exists_even_lattice((pos, neg), trivial_form())
            assert got == ((pos - neg) % 8 == 0), (pos, neg)


# ------------------------------------------------------------ gluing data


def test_find_and_verify_datum_for_hyperbolic_plane():
    lat = standard_lattice("U")
    datum = find_embedding_datum(lat)
    assert len(datum.h_l) == 0
    assert datum.k_rank == 10
    assert datum.k_signature == (1, 9)
    ok, reasons = verify_embedding_datum(lat, datum)
    assert ok, reasons
    m_form = discriminant_form(standard_lattice("M"))
    assert fqf_isomorphic(datum.k_fqf, m_form) is not None


def test_find_and_verify_datum_for_four_four():
    lat = Lattice([[4, 0], [0, 4]])
    datum = find_embedding_datum(lat)
    assert len(datum.h_l) == 1
    ok, reasons = verify_embedding_datum(lat, datum)
    assert ok, reasons


def test_verify_rejects_wrong_complement_rank():
    lat = standard_lattice("U")
    good = find_embedding_datum(lat)
    bad = make_datum(
        good.h_l, good.h_n, good.gamma, 9, (1, 8), good.k_fqf, delta=good.delta
    )
    ok, reasons = verify_embedding_datum(lat, bad)
    assert not ok
    assert reasons


def test_verify_rejects_wrong_signature():
    lat = standard_lattice("U")
    good = find_embedding_datum(lat)
    bad = make_datum(
        good.h_l, good.h_n, good.gamma, 10, (0, 10), good.k_fqf, delta=None
    )
    ok, reasons = verify_embedding_datum(lat, bad)
    assert not ok


def test_verify_rejects_order_four_generators():
    # the generator 2 in Z/8 has order four, one beyond what gluing allows
    lat = Lattice([[8]])
    with pytest.raises(NotTwoGroup):
        verify_embedding_datum(
            lat,
            make_datum([[2]], [[0] * 10], [[0] * 10], 11, (1, 10), trivial_form()),
        )


# ------------------------------------------------------------ descent


def test_index_p_sublattice_frozen():
    sub, rows = index_p_sublattice(Lattice([[4, 0], [0, 4]]), 3)
    assert sub.gram == ((36, 0), (0, 4))
    assert [list(r) for r in rows] == [[3, 0], [0, 1]]
    sub, rows = index_p_sublattice(standard_lattice("U"), 3)
    assert sub.gram == ((0, 3), (3, -2))
    assert abs(sub.det) == 9


def test_index_p_rejects_two():
    with pytest.raises(BadPrime):
        index_p_sublattice(Lattice([[4]]), 2)


def test_index_p_scales_discriminant():
    rng = random.Random(137)
    for _ in range(15):
        lat = random_even_lattice(rng, max_rank=4)
        for p in (3, 5):
            if abs(lat.det) % p == 0:
                continue
            sub, rows = index_p_sublattice(lat, p)
            assert abs(sub.det) == abs(lat.det) * p * p


def test_condition_star_frozen():
    report = condition_star(Lattice([[4, 0], [0, 4]]), Lattice([[36, 0], [0, 4]]))
    assert report.index == 3
    assert report.verdict
    report = condition_star(Lattice([[4, 0], [0, 4]]), Lattice([[16, 0], [0, 4]]))
    assert report.index == 2
    assert not report.gcd_ok
    assert not report.verdict


def test_transfer_round_trip():
    parent = Lattice([[4, 0], [0, 4]])
    datum = find_embedding_datum(parent)
    child, rows = index_p_sublattice(parent, 3)
    down = transfer_datum_down(parent, child, datum, rows)
    assert down.k_fqf.group_order == datum.k_fqf.group_order * 9
    ok, reasons = verify_embedding_datum(child, down)
    assert ok, reasons
    up = transfer_datum_up(parent, child, down, rows)
    ok, reasons = verify_embedding_datum(parent, up)
    assert ok, reasons
    assert up.h_l == datum.h_l
    assert up.gamma == datum.gamma
    assert fqf_isomorphic(up.k_fqf, datum.k_fqf) is not None


def test_transfer_guards():
    parent = Lattice([[4, 0], [0, 4]])
    datum = find_embedding_datum(parent)
    bad_child = Lattice([[16, 0], [0, 4]])
    with pytest.raises(StarViolated):
        transfer_datum_down(parent, bad_child, datum, [[2, 0], [0, 1]])
    with pytest.raises(EvenIndex):
        transfer_datum_up(parent, bad_child, datum, [[2, 0], [0, 1]])


def test_transferred_datum_milgram_consistency():
    parent = Lattice([[4, 0], [0, 4]])
    datum = find_embedding_datum(parent)
    child, rows = index_p_sublattice(parent, 3)
    down = transfer_datum_down(parent, child, datum, rows)
    pos, neg = down.k_signature
    assert milgram_signature(down.k_fqf) == (pos - neg) % 8
