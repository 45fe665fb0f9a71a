"""
Diagrams of group-algebra elements
==================================

An element xi of K[G] moves valuations around.  Its valuation profile
f_xi(a) records the smallest valuation reached from the ideal of level a.
The jumps of f_xi give the minimal cosets G, and the cheapest level among
them is d.  A witness is semistable when p does not divide d and exactly
two cosets sit on that level.

The same picture comes out of L (x)_K L through the isomorphism phi,
which gives an independent check.
"""

from scaffoldkit import (
    ExtensionSpec,
    GroupAlgebraElem as GA,
    big_G,
    build_extension,
    coset_le,
    is_semistable_witness,
    normalize_witness,
    phi_inverse_oracle,
)
from scaffoldkit.diagram import R_support, ValuationProfile, up_closure_member

ext = build_extension(ExtensionSpec.simple(3, (1,)))
xi = GA.sigma_minus_one(ext, (1,))
prof = ValuationProfile(xi)
print("f_xi on -3..6:", [prof.f(a).value for a in range(-3, 7)])

diag = big_G(xi)
print("G =", [tuple(c) for c in diag.G], " d =", diag.d, " N =", [tuple(c) for c in diag.N])
v = is_semistable_witness(xi)
print("semistable:", v.semistable, " stable:", v.stable)

# Shift by a power of t so that N sits on level h.
xi0 = normalize_witness(xi)
print("normalised d =", big_G(xi0).d, " h =", ext.h)

# The identity is not a witness: its diagram has a single minimal coset.
print("identity:", is_semistable_witness(GA.identity(ext)).reasons)

# Tensor route.  Write xi = phi(sum c_j (x) pi^j), take pi-adic digits of
# each c_j, and compare the up-closure with membership in the diagram.
cs = phi_inverse_oracle(xi)
R = R_support(cs, diag.d + 2 * ext.P)
window = [(a, b) for a in range(diag.d - ext.P, diag.d + ext.P) for b in range(ext.P)]
agree = all(prof.contains((a, b)) == up_closure_member(R, (a, b), ext.P) for a, b in window)
print("tensor route agrees on", len(window), "cosets:", agree)

# The coset order at P = 3: [4,0] is also represented by (1,3), which lies
# above (0,1), while no representative of [0,1] lies above (4,0).
print("[0,1] <= [4,0]:", coset_le((0, 1), (4, 0), 3), "  [4,0] <= [0,1]:", coset_le((4, 0), (0, 1), 3))
