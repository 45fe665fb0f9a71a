"""
Galois scaffolds, checked and built
===================================

A scaffold is a tuple of operators Psi_i in K[G] that shift the valuation
of lambda_t by a fixed amount, or kill it, depending on one base-p digit,
up to a unit and an error.  The precision is how far ahead the error sits;
verify_scaffold finds the best units and reports the smallest margin.

Scaffolds and semistable witnesses turn into each other:
  scaffold -> xi = Psi^(P-2) -> normalise -> Hadamard powers -> scaffold.
"""

from scaffoldkit import (
    ExtensionSpec,
    GroupAlgebraElem as GA,
    NotAScaffold,
    Scaffold,
    TruncatedSeries,
    breaks_congruence,
    build_extension,
    build_from_semistable,
    certify,
    charp_promotion,
    criterion_c_falsifier,
    lambda_family,
    normalize_witness,
    semistable_from_scaffold,
    sigma_minus_one_scaffold,
    stability_threshold,
    verify_scaffold,
)

# Degree p: sigma - 1 is a scaffold.
ext = build_extension(ExtensionSpec.simple(5, (3,)))
sc = certify(sigma_minus_one_scaffold(ext))
print("p=5 e=3: sigma - 1 has precision", sc.precision)

# The identity shifts nothing, so it fails at once.
try:
    verify_scaffold(Scaffold(ext, (GA.identity(ext),), lambda_family(ext)))
except NotAScaffold as err:
    print("identity rejected:", err)

# Two generators, p = 2, breaks (1, 9).  The plain pair (sigma_1 - 1,
# sigma_2 - 1) fails at t = 1 and 3; adding t^-2 (sigma_2 - 1) to the
# first operator repairs it.
ext2 = build_extension(ExtensionSpec.simple(2, (1, 5)))
s1, s2 = GA.sigma_minus_one(ext2, (1, 0)), GA.sigma_minus_one(ext2, (0, 1))
hand = Scaffold(ext2, (s1 + s2 * TruncatedSeries.monomial(ext2.F, -2), s2), lambda_family(ext2))
rep = verify_scaffold(hand)
print("\np=2 e=(1,5) hand scaffold: precision", rep.precision)
print("breaks congruent to -i0 mod P:", breaks_congruence(ext2))

# Scaffold -> witness -> scaffold.
xi, verdict = semistable_from_scaffold(certify(hand))
print("witness: d =", verdict.d, " N =", [tuple(c) for c in verdict.N], " stable:", verdict.stable)
rebuilt = build_from_semistable(normalize_witness(xi))
print("rebuilt scaffold precision:", rebuilt.precision)

# In characteristic p, Psi^p = 0 lets the precision go to infinity,
# which is past the stability threshold.
promoted = charp_promotion(certify(hand))
print("\npromoted precision:", promoted.precision, " threshold:", stability_threshold(ext2))

# Non-congruent breaks: the valuation criterion fails on a concrete element.
ext3 = build_extension(ExtensionSpec.simple(3, (1, 2)))
print("\np=3 e=(1,2): breaks", ext3.ramification.breaks, "congruent:", breaks_congruence(ext3))
res = criterion_c_falsifier(ext3, budget=10, seed=0)
print("falsified:", res.falsified, "after", res.tested, "tests; witness", res.witness)
