# The rank-12 ambient lattice, the parity functional on it, and isometries
# that respect both.

import random

from enrlat import ambient, epsilon, generate_isometry, involution_eigenlattices

# The ambient lattice is U + U(2) + E8(2): signature (2,10), determinant
# 1024 up to sign. Coordinates are (e, f, h, k, then eight scaled E8 ones).

amb = ambient()
print("ambient rank", amb.rank, "sig", amb.signature, "det", amb.det)

# The parity of a vector reads off the first two coordinates mod 2.
# Basis vectors:

for i, name in ((0, "e"), (1, "f"), (2, "h"), (4, "first E8(2) coord")):
    v = [0] * 12
    v[i] = 1
    print("parity of %s: %d" % (name, epsilon(v)))

# The point of the functional: vectors whose self-pairing is 2 mod 4 all
# have parity zero. Sample a few thousands and watch the invariant hold.

rng = random.Random(0)
count = 0
while count < 3000:
    x = [rng.randint(-9, 9) for _ in range(12)]
    if amb.norm(x) % 4 != 2:
        continue
    assert epsilon(x) == 0
    count += 1
print("checked parity 0 on", count, "vectors of norm 2 mod 4")

# Where the ambient lattice comes from: an order-two isometry of the even
# unimodular lattice of signature (3,19) splits it into a fixed half and an
# anti-fixed half. The anti-fixed half is our ambient lattice.

split = involution_eigenlattices()
print()
print("fixed part:     rank", split.plus.rank, "sig", split.plus.signature)
print("anti-fixed part: rank", split.minus.rank, "sig", split.minus.signature)
print("together they span a sublattice of index", split.index)

# Isometries of the ambient lattice that preserve parity can be generated
# deterministically from a seed. Compositions of reflections and parabolic
# maps, always exact.

mat = generate_isometry(seed=5, length=9)
g = [list(r) for r in amb.gram]
from enrlat.intmat import mat_mul, transpose

assert mat_mul(mat_mul([list(r) for r in mat], g), transpose([list(r) for r in mat])) == g
x = [1, 2, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0]
y = [sum(x[r] * mat[r][c] for r in range(12)) for c in range(12)]
print()
print("isometry moves", x)
print("          to  ", y)
print("parity before", epsilon(x), "after", epsilon(y), "norm before", amb.norm(x), "after", amb.norm(y))
