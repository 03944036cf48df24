"""The nil-Hecke ring in A2: generators, products and Kostant-Kumar polynomials."""

from kkpoly.nilhecke import c, c_recursive, c_subword_oracle, d, dyer_check, x_gen, x_of
from kkpoly.root_system import build
from kkpoly.weyl import enumerate_group, from_word, identity, length

rs = build("A", 2)
e = identity(rs)
w = from_word(rs, [1, 2, 1])

x1, x2 = x_gen(rs, 1), x_gen(rs, 2)
print("x1 =", x1)
print("x1*x1 is zero:", (x1 * x1).is_zero())

# three ways to get the coefficient of delta_id in x_w
print("product  ", (x1 * x2 * x1).coeff(e))
print("recursion", c_recursive(w, e))
print("subwords ", c_subword_oracle([1, 2, 1], e, rs))

# d_w = (-1)^l(w) c_(w,id) * prod of positive roots
for u in enumerate_group(rs):
    print(f"{str(u):8} l={length(u)}  d = {d(u).value}")

# c_(w,v) times the roots a with s_a v <= w is a polynomial
g, ok = dyer_check(w, e)
print("g =", g, ok)
print("x_w by the other reduced word agrees:", x_of(w, [2, 1, 2]) == x_of(w))
