"""
Laurent series over a finite field
==================================

Coefficients live in F_q, stored as integer codes.  A series knows how far
it is reliable: exact ones carry cap = INF, truncated ones know only their
coefficients below the cap.
"""

from scaffoldkit import GF, INF, TruncatedSeries

F = GF(3)
a = TruncatedSeries.from_dict(F, {-1: 1, 0: 2, 2: 1})
b = TruncatedSeries.from_dict(F, {0: 1, 1: 1})
print("a =", a)
print("b =", b)
print("a * b =", a * b)
print("v(a) =", a.val(), " v(a*b) =", (a * b).val())

# Inverting needs a working precision; the answer is truncated there.
inv = b.inverse(prec=8)
print("1/b =", inv)
print("b * (1/b) =", b * inv)

# Frobenius is a ring map, so (a + b)^3 = a^3 + b^3.
print("Frobenius additive:", (a + b).frobenius() == a.frobenius() + b.frobenius())

# Losing precision shows up in the valuation: a difference that vanishes
# below the cap is only "at least" something.
c = a.truncate(3) - a
print("truncated minus exact:", c.val(), "cap", c.cap)

# A bigger field: F_9, where the generator has multiplicative order 8.
F9 = GF(3, 2)
g = F9.gen()
powers = [g]
while powers[-1] != F9(1):
    powers.append(powers[-1] * g)
print("F_9 generator order:", len(powers))
print("g^3 is the Frobenius image:", g ** 3 == g.frobenius())
