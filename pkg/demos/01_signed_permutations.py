"""Signed permutations, lengths, rank matrices and Bruhat order in type C."""

from kkpoly.root_system import build
from kkpoly.weyl import (
    bruhat_leq, compose, enumerate_involutions, from_reflection, label_order, length,
    parse_perm, rank_matrix, reduced_word, support,
)

c5 = build("C", 5)
R = lambda name: from_reflection(c5, c5.root(name))

# three orthogonal reflections multiply to an involution
w = compose(R("e1+e5"), compose(R("2e3"), R("e2-e4")))
print(w.two_line())
print("length", length(w), "reduced word", reduced_word(w))
print("support", [r.name for r in support(w)])

# rank matrix: rooks weakly south-west of each cell
w = parse_perm(build("C", 4), "-3,-2,4,-1")
labels = label_order(4, signed=True)
print("     " + " ".join(f"{l:>2}" for l in labels))
for lab, row in zip(labels, rank_matrix(w)):
    print(f"{lab:>3}  " + " ".join(f"{x:>2}" for x in row))

# the reflections of the first column form a chain
c3 = build("C", 3)
chain = ["e1-e2", "e1-e3", "e1+e3", "e1+e2"]
refl = [from_reflection(c3, c3.root(n)) for n in chain]
print("chain:", all(bruhat_leq(a, b) for a, b in zip(refl, refl[1:])))

# involutions by length
by_len = {}
for s in enumerate_involutions(c3):
    by_len.setdefault(length(s), []).append(str(s))
for l in sorted(by_len):
    print(l, by_len[l])
