# Tabulating primitive embeddings of small lattices into the rank-12
# ambient lattice, label by label.
#
# A label is a bit pattern, one bit per basis vector of the source lattice,
# recording the parity each embedded image vector should carry. Not every
# label is achievable, and the achievable set is itself an invariant worth
# tabulating.

from enrlat import (
    ambient,
    character_upper_bound,
    embedding_complement,
    embedding_for_label,
    epsilon,
    is_twice_even,
    realized_characters,
    suggest_params,
    t_gram,
)
from enrlat.errors import NotFound

amb = ambient()

# Rank-2 sources first. Param triples come from a seeded suggester so the
# demo is reproducible; the three nonzero labels all land.

params = suggest_params(20, seed=11, count=1)[0]
print("source gram", t_gram(20, params))
for bits in ((0, 1), (1, 0), (1, 1)):
    emb = embedding_for_label(20, params, bits)
    pars = tuple(epsilon(v) for v in emb.images)
    norms = tuple(amb.norm(v) for v in emb.images)
    print("  label", bits, "-> parities", pars, "norms", norms)

# The all-zero label is refused by construction. The tables only produce
# images with at least one odd-parity vector; asking otherwise raises.

try:
    embedding_for_label(20, params, (0, 0))
except NotFound as err:
    print("zero label refused:", err)

# Each embedding drags a complement behind it, the orthogonal complement of
# the image inside the ambient lattice. For these sources the complement
# is always twice even: every pairing is divisible by 2 and every
# self-pairing by 4. That divisibility is the structural fact the tables
# exist to exhibit.

six = suggest_params(19, seed=11, count=1)[0]
emb = embedding_for_label(19, six, (1, 1, 1))
comp_rows, comp = embedding_complement(emb)
print()
print("rank-3 source", t_gram(19, six))
print("complement rank", comp.rank, "sig", comp.signature, "det", comp.det)
print("twice even:", is_twice_even(comp.gram))

# The parity patterns that can appear for a given source are bounded by a
# finite character computation on the source gram alone, before any
# search. The realized set then meets the bound or falls short; comparing
# the two is a one-line audit.

gram = t_gram(19, six)
bound = character_upper_bound(gram)
got = realized_characters(19, six)
print()
print("character bound    %d patterns" % len(bound))
print("actually realized  %d patterns" % len(got))
print("realized within bound:", set(got) <= set(bound))
