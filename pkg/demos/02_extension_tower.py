"""
Artin-Schreier towers and their ramification
============================================

x_j^p - x_j = u_j t^{-e_j} for a few generators gives a totally ramified
extension with Galois group (Z/p)^n.  Elements are vectors over F_q((t)) in
a basis adapted to the valuation, so v_L is read off directly.
"""

from scaffoldkit import ExtensionSpec, TruncatedSeries, build_extension, lambda_family

for p, es in [(3, (1,)), (5, (2,)), (2, (1, 5)), (3, (1, 2))]:
    ext = build_extension(ExtensionSpec.simple(p, es))
    r = ext.ramification
    print(f"p={p} e={es}:  lower breaks {r.breaks}, d = {r.d}, i0 = {ext.i0}, h = {ext.h}")

ext = build_extension(ExtensionSpec.simple(2, (1, 5)))
pi = ext.uniformizer
print("\nuniformizer", pi, "has valuation", pi.val())

# The group acts by x_j -> x_j + s_j.  sigma(pi) - pi measures ramification.
for s in ext.group()[1:]:
    diff = ext.apply_automorphism(s, pi) - pi
    print("  sigma =", s, " v(sigma(pi) - pi) =", diff.val())

# lambda_t: a fixed element of valuation t for each integer t.
lam = lambda_family(ext)
print("\nvaluations of lambda_t:", [lam(t).val().value for t in range(-3, 5)])

# The generators really solve x^p - x = t^{-e}.
for j, e in enumerate((1, 5), start=1):
    x = ext.gen(j)
    rhs = ext.from_base(TruncatedSeries.monomial(ext.F, -e))
    print(f"x_{j}^2 - x_{j} == t^-{e}:", x * x - x == rhs, f"  v(x_{j}) =", x.val())
