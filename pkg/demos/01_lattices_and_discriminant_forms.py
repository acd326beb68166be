# Walk through the exact-arithmetic core: integral lattices, their Smith
# invariants, and the finite quadratic form living on the discriminant group.
#
# Everything below runs on plain Python integers and fractions. There is no
# floating point anywhere in the chain, so every printed number is exact.

from fractions import Fraction

from enrlat import (
    Lattice,
    direct_sum,
    discriminant_form,
    milgram_signature,
    rescale,
    standard_lattice,
)

# A lattice is just its Gram matrix. The constructor checks symmetry,
# evenness of the diagonal, and nondegeneracy.

hyper = standard_lattice("U")
print("hyperbolic plane:", hyper.gram, "det", hyper.det, "sig", hyper.signature)

e8 = standard_lattice("E8")
print("negative E8: rank", e8.rank, "det", e8.det, "sig", e8.signature)

# Rescaling multiplies every pairing by a constant. Determinants pick up
# the constant to the rank-th power.

doubled = rescale(e8, 2)
print("E8 scaled by 2: det", doubled.det, "=", e8.det, "* 2 **", e8.rank)

# The discriminant group dual/L carries a quadratic form with values in
# Q/2Z. Its order always equals |det|.

lat = Lattice([[4, 1], [1, -6]])
form = discriminant_form(lat)
print()
print("gram", lat.gram, "-> group of order", form.group_order)
print("invariant factors:", form.invariant_factors)
for coords in list(form.elements())[:6]:
    print("  q%s = %s mod 2" % (coords, form.q_of(coords)))

# The Gauss sum over that finite form recovers the lattice signature mod 8.
# This is the single most useful consistency check in the whole package:
# it couples an analytic quantity to the exact arithmetic.

pos, neg = lat.signature
print()
print("signature:", (pos, neg))
print("milgram invariant:", milgram_signature(form), "== (pos - neg) mod 8 ==", (pos - neg) % 8)

# Direct sums multiply determinants and add signatures; the Milgram value
# is additive mod 8 along the way.

both = direct_sum(lat, rescale(hyper, 3))
print()
print("after direct sum with U(3): det", both.det, "sig", both.signature)
print("milgram:", milgram_signature(discriminant_form(both)))
