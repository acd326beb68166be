# Binary quadratic forms, imaginary quadratic class groups, and the
# three-fold jump in a ray class invariant that singles out certain
# rank-2 gram matrices.

from enrlat import (
    class_group,
    class_number_nonmaximal,
    cm_report,
    fundamental_split,
    prime2_splitting,
    ray_class2_order,
    reduce_form,
)

# Reduction first. Any positive form lands on a unique reduced
# representative; the class group of a discriminant is the set of reduced
# forms under composition, and we only need the count.

print("reduce (7, 17, 11) ->", reduce_form((7, 17, 11)))
print("reduce (6, 1, 2)   ->", reduce_form((6, 1, 2)))

for d in (-23, -47, -163, -408):
    g = class_group(d)
    print("disc %6d: h = %2d, ambiguous classes = %d" % (d, g.h, g.ambiguous_count))

# Every discriminant factors as conductor squared times a fundamental one,
# and the fundamental part controls everything local.

for d in (-75, -304, -288):
    f, d0 = fundamental_split(d)
    print("disc %5d = %d^2 * %d" % (d, f, d0))

# Class numbers of nonmaximal orders follow from the fundamental one by a
# multiplicative correction over the primes dividing the conductor.

for d in (-75, -288):
    f, d0 = fundamental_split(d)
    print("h(%d) =" % d, class_number_nonmaximal(d0, f),
          "(from h(%d) = %d)" % (d0, class_group(d0).h))

# How 2 behaves in the field depends on the discriminant mod 8: split,
# inert, or ramified. The ray invariant below is sensitive to exactly this.

for d in (-7, -15, -23, -4, -8, -3, -11):
    print("disc %3d: 2 is %s, ray order %d" % (d, prime2_splitting(d), ray_class2_order(d)))

# For fundamental discriminants congruent to 5 mod 8 the prime 2 stays
# inert and the ray order is three times the class number, except at -3
# where the extra units of the order eat the factor. That factor of three
# is the arithmetic signal the rank-2 report looks for.

for d in (-3, -11, -19, -35, -43):
    h = class_group(d).h
    r = ray_class2_order(d)
    print("disc %3d: h = %d, ray order = %d, ratio = %d" % (d, h, r, r // h))

# The report wraps it all up for a positive even rank-2 gram: reduce the
# form, split off the conductor, find how 2 splits, and decide whether the
# index-3 jump applies.

for gram in ([[2, 1], [1, 10]], [[2, 1], [1, 2]], [[4, 0], [0, 4]], [[2, 0], [0, 4]]):
    rep = cm_report(gram)
    print()
    print("gram", gram, "-> disc", rep.disc,
          "fundamental", rep.fundamental_disc, "conductor", rep.conductor)
    print("  2 is %s, maximal order: %s, applies: %s, index %s"
          % (rep.splitting, rep.end_is_maximal, rep.applies, rep.index))
