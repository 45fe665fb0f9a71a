"""
Base-p digits and the numbers attached to the breaks
=====================================================

Residues mod p^n are compared digit by digit.  Lucas' theorem says the
same order comes from binomial coefficients mod p.
"""

from math import comb

from scaffoldkit import DigitSystem, digits, lucas_preceq, preceq

p, n = 3, 2
print("digits of 0..8 base 3:", [digits(s, p, n) for s in range(9)])

print("s below 7 = (1, 2) digitwise:", [s for s in range(9) if preceq(s, 7, p, n)])
print("s with C(7, s) nonzero mod 3:", [s for s in range(9) if comb(7, s) % 3])
print("Lucas agrees:", all(preceq(s, t, p, n) == lucas_preceq(s, t, p) for s in range(9) for t in range(9)))

# The lower breaks fix b(s) and its inverse a.  b(p^n - 1) is i0.
ds = DigitSystem(p, (1, 4))
print("\nbreaks (1, 4)")
print("b(s):", [ds.b(s) for s in range(9)])
print("a table:", ds.a_table)
print("b(P - 1) =", ds.b(8), "  a(r(-b(s))) = s:", all(ds.a(ds.r(-ds.b(s))) == s for s in range(9)))
