#!/usr/bin/env python3
"""Overlapping foams and subset-sum polynomial identities.

Sylvester double sums, the Exchange identity, symmetric interpolation,
and the three-alphabet partition identity, each both as a closed formula
and as an overlap-diagram state sum.
"""

from foamlib.exactalg.multipoly import MultiPoly
from foamlib.sylfoam import (
    alphabet,
    diagram_exchange_sides,
    diagram_sylvester,
    evaluate_overlap,
    r_product,
    sylvester_double_sum,
    verify_chen_louck,
    verify_dksv,
    verify_exchange,
)

# ---------------------------------------------------------------------------
# The R-product is the building block: R(Y, Z) multiplies all differences.

print("R({y}, {z})       =", r_product(["y"], ["z"]).render())
print("R({a1,a2}, {b})   =", r_product(["a1", "a2"], ["b"]).render())

# ---------------------------------------------------------------------------
# Sylvester double sums.  Each summand is a rational function, but the sum
# clears every denominator; the library multiplies through by Vandermonde
# cofactors and divides back out exactly (a failing division would raise).

A, B = alphabet("A", 2), alphabet("B", 1)
syl = sylvester_double_sum(A, B, 1, 0)
print("Syl_{1,0}(A,B)(x) =", syl.render())          # b1 - x
assert syl.degree_in("x") <= 1

# The same value arises as an overlap-diagram state sum: two seamed
# spheres (ordered set partitions of A and of B) and a thickness-one
# surface carrying x, intersecting in four circles.

diagram = diagram_sylvester(A, B, 1, 0)
assert evaluate_overlap(diagram) == syl
print("foam state sum agrees with the double-sum formula")

# ---------------------------------------------------------------------------
# The Exchange identity swaps the roles of the two alphabets.  It holds
# exactly when the spectator alphabet X has at most m + n - 2d variables;
# the verifier uses the maximal size.

for entry in verify_exchange(3, 2, mode="symbolic"):
    print(f"exchange d={entry['d']} |X|={entry['size_x']}:",
          "holds" if entry["ok"] else "FAILS")

lhs_diag, rhs_diag = diagram_exchange_sides(
    alphabet("A", 2), alphabet("B", 2), alphabet("X", 2), 1
)
assert evaluate_overlap(lhs_diag) == evaluate_overlap(rhs_diag)
print("exchange foam diagrams agree")

# ---------------------------------------------------------------------------
# Symmetric interpolation: a symmetric polynomial f of per-variable degree
# at most d in m - d variables is recovered from its values on the
# (m - d)-subsets of an alphabet of size m.  With m = d + 1 this is
# classical one-variable Lagrange interpolation.

quadratic = MultiPoly.var("s1") * MultiPoly.var("s1") - MultiPoly.const(2)
print("Lagrange case m=3, d=2:", verify_chen_louck(3, 2, quadratic))

# ---------------------------------------------------------------------------
# The partition identity trades subsets of A for ordered partitions of a
# larger alphabet E (the generalized theta-foam).

print("partition identity:", verify_dksv(2, 2, 1, 1, 3, mode="symbolic"))
