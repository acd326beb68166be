import random
from fractions import Fraction

import pytest

from enrlat.errors import Degenerate
from enrlat.fqf import (
    FiniteQuadraticForm,
    canonical_form,
    direct_sum_fqf,
    discriminant_form,
    fqf_isomorphic,
    milgram_signature,
    negate_fqf,
    odd_jordan,
    p_part,
    perp_subgroup,
    subgroup_order,
    quotient_form,
    splits_unit_block,
    subgroup_matrix,
    trivial_form,
    two_adic_jordan,
    verify_fqf_iso,
)
from enrlat.intmat import prime_factors
from enrlat.lattice import Lattice, direct_sum, standard_lattice

from _oracles import brute_gauss_signature


def random_even_lattice(rng, max_rank=5, bound=8, det_cap=3000):
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


def test_discriminant_form_of_unimodular_is_trivial():
    for tag in ("U", "E8", "Lambda"):
        form = discriminant_form(standard_lattice(tag))
        assert form.is_trivial


def test_discriminant_form_frozen_values():
    form = discriminant_form(Lattice([[4]]))
    assert form.invariant_factors == (4,)
    assert form.q_of([1]) == Fraction(1, 4)
    form = discriminant_form(Lattice([[-4]]))
    assert form.q_of([1]) == Fraction(7, 4)
    form = discriminant_form(standard_lattice("U2"))
    assert form.invariant_factors == (2, 2)
    vals = sorted(form.q_of(x) for x in ((0, 1), (1, 0), (1, 1)))
    assert vals == [0, 0, 1]


def test_milgram_on_frozen_forms():
    assert milgram_signature(discriminant_form(Lattice([[2]]))) == 1
    assert milgram_signature(discriminant_form(Lattice([[-2]]))) == 7
    assert milgram_signature(discriminant_form(standard_lattice("U2"))) == 0
    assert milgram_signature(trivial_form()) == 0


def test_milgram_matches_signature_mod_8():
    rng = random.Random(59)
    for _ in range(30):
        lat = random_even_lattice(rng)
        pos, neg = lat.signature
        assert milgram_signature(discriminant_form(lat)) == (pos - neg) % 8


def test_milgram_matches_brute_complex_sum():
    rng = random.Random(61)
    tried = 0
    while tried < 12:
        lat = random_even_lattice(rng, max_rank=3, det_cap=300)
        form = discriminant_form(lat)
        s = brute_gauss_signature(form.orders, form.values)
        assert s is not None
        assert milgram_signature(form) == s
        tried += 1


def test_milgram_additive_on_direct_sums():
    rng = random.Random(67)
    for _ in range(15):
        a = discriminant_form(random_even_lattice(rng, max_rank=3))
        b = discriminant_form(random_even_lattice(rng, max_rank=3))
        both = direct_sum_fqf(a, b)
        assert milgram_signature(both) == (milgram_signature(a) + milgram_signature(b)) % 8


def test_negate_flips_milgram():
    rng = random.Random(71)
    for _ in range(10):
        form = discriminant_form(random_even_lattice(rng, max_rank=3))
        assert milgram_signature(negate_fqf(form)) == (-milgram_signature(form)) % 8


def test_p_part_reassembly():
    rng = random.Random(73)
    for _ in range(15):
        form = discriminant_form(random_even_lattice(rng))
        parts = [p_part(form, p) for p in prime_factors(form.group_order)]
        if not parts:
            continue
        rebuilt = parts[0]
        for extra in parts[1:]:
            rebuilt = direct_sum_fqf(rebuilt, extra)
        assert fqf_isomorphic(form, rebuilt) is not None


def test_canonical_form_is_stable():
    rng = random.Random(79)
    for _ in range(10):
        form = discriminant_form(random_even_lattice(rng, max_rank=4))
        c1 = canonical_form(form)
        c2 = canonical_form(c1)
        assert c1.orders == c2.orders
        assert c1.values == c2.values


def test_odd_jordan_blocks_multiply_to_group_order():
    rng = random.Random(83)
    for _ in range(10):
        form = discriminant_form(random_even_lattice(rng))
        for p in prime_factors(form.group_order):
            if p == 2:
                continue
            blocks = odd_jordan(form, p)
            total = 1
            for scale, _ in blocks:
                total *= scale
            assert total == p_part(form, p).group_order


def test_two_adic_jordan_covers_group():
    rng = random.Random(89)
    for _ in range(10):
        form = discriminant_form(random_even_lattice(rng))
        blocks = two_adic_jordan(form)
        total = 1
        for blk in blocks:
            if blk[0] == "q":
                total *= blk[1]
            else:
                total *= blk[1] ** 2
        assert total == p_part(form, 2).group_order


def test_splits_unit_block_examples():
    yes = discriminant_form(Lattice([[2]]))
    assert splits_unit_block(yes)
    no = discriminant_form(Lattice([[-4]]))
    assert not splits_unit_block(no)
    assert not splits_unit_block(trivial_form())


def test_quotient_by_isotropic_divides_order_by_square():
    lat = Lattice([[4, 0], [0, 4]])
    form = discriminant_form(lat)
    smat = subgroup_matrix(form, [[2, 2]])
    tmat = perp_subgroup(form, [[2, 2]])
    assert subgroup_order(form, tmat) == 8
    quo, qmap = quotient_form(form, tmat, smat)
    assert quo.group_order == 8 // 2
    for i, amb in enumerate(qmap.gens_in_ambient):
        unit = [0] * quo.num_gens
        unit[i] = 1
        assert quo.q_of(unit) == form.q_of(amb) % 2
    assert not any(qmap.to_coords([2, 2]))


def test_isomorphism_search_and_verification():
    a = discriminant_form(Lattice([[4, 0], [0, 4]]))
    b = discriminant_form(Lattice([[4, 0], [0, 4]]))
    iso = fqf_isomorphic(a, b)
    assert iso is not None
    assert verify_fqf_iso(a, b, iso)
    c = discriminant_form(Lattice([[-4, 0], [0, -4]]))
    assert fqf_isomorphic(a, c) is None


def test_isomorphism_distinguishes_same_group_different_form():
    # both are (Z/2)^2 but with different quadratic values
    u2 = discriminant_form(standard_lattice("U2"))
    d4 = discriminant_form(
        Lattice([[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]])
    )
    assert u2.invariant_factors == d4.invariant_factors
    assert fqf_isomorphic(u2, d4) is None


def test_odd_index_sublattice_keeps_two_part():
    rng = random.Random(97)
    checked = 0
    while checked < 8:
        lat = random_even_lattice(rng, max_rank=3, det_cap=500)
        n = lat.rank
        rows = [[3 if i == j else 0 for j in range(n)] for i in range(n)]
        from enrlat.lattice import sublattice_from_gram_change

        sub = sublattice_from_gram_change(lat, rows)
        two_a = p_part(discriminant_form(lat), 2)
        two_b = p_part(discriminant_form(sub), 2)
        assert fqf_isomorphic(two_a, two_b) is not None
        checked += 1
