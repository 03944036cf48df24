"""
Lengths after embedding into a group of rank n+2.

For w in W and 1 <= k1 < k2 <= m+2 the element w' = w s(eta_k1 -/+ eta_k2)
has a closed-form length. Compare the direct inversion count with the two
closed forms, one with 2(k2-k1) and one with 2|B| = 2(k2-k1-1).
"""

from kkpoly.harness import Embedding, length_lemma_C, verify_length_lemma_a
from kkpoly.root_system import build
from kkpoly.weyl import enumerate_involutions, identity

c2 = build("C", 2)
for sign in ("minus", "plus"):
    res = length_lemma_C(Embedding("C", 2, 1, 2), identity(c2), sign)
    print(sign, res)

for w in list(enumerate_involutions(c2))[:3]:
    for k1, k2 in [(1, 3), (2, 4)]:
        res = length_lemma_C(Embedding("C", 2, k1, k2), w, "minus")
        print(w, (k1, k2), "direct", res.direct, "printed-direct", res.printed - res.direct)

report = verify_length_lemma_a(3)
print(report.to_text())
