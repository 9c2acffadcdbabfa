#!/usr/bin/env python3
"""Theta webs: quantum multinomials and Galois orbit decompositions.

The circle-of-thickness web for a composition of N has graded rank the
balanced q-multinomial; after base change along an irreducible separable
polynomial its state space becomes a product of field extensions whose
spectrum is the orbit set of the Galois group on ordered set partitions
of the roots.
"""

from foamlib.exactalg import parse_unipoly, smallest_irreducible
from foamlib.exactalg.scalars import QQ_DOMAIN, zmod
from foamlib.webgal import (
    disk_dot_basis_check,
    multinomial,
    q_multinomial,
    validated_root_permutations,
    web_decomposition,
    web_decomposition_from_action,
)

# ---------------------------------------------------------------------------
# Balanced q-multinomials: palindromic, positive, multinomial at q = 1.

for parts in [(1, 1), (1, 1, 1), (1, 2), (2, 2)]:
    N = sum(parts)
    qm = q_multinomial(N, parts)
    print(f"[{N}; {parts}] = {qm.render()}   (q=1: {qm.at_q1()})")
    assert qm.is_palindromic()
    assert qm.at_q1() == multinomial(N, parts)

# ---------------------------------------------------------------------------
# Base change along x^3 + x + 1 over GF(2).  The Frobenius acts as a
# 3-cycle on the roots; on the 6 orderings of the roots the action is
# free, so the all-singleton web becomes GF(8) x GF(8).

f = parse_unipoly("x^3 + x + 1", zmod(2))
print("(1,1,1):", web_decomposition(f, (1, 1, 1)).factors)
print("(1,2):  ", web_decomposition(f, (1, 2)).factors)
print("(3):    ", web_decomposition(f, (3,)).factors)

# Dimensions always add to the multinomial coefficient.

for p in (2, 3):
    g = smallest_irreducible(p, 4)
    for parts in [(1, 1, 1, 1), (1, 1, 2), (2, 2), (1, 3)]:
        dec = web_decomposition(g, parts)
        assert dec.total_dimension == multinomial(4, parts)
print("dimension totals match the multinomials")

# ---------------------------------------------------------------------------
# Rational splitting data: x^4 + 1 has roots z, z^3, -z, -z^3 in its own
# splitting field, a biquadratic extension.  The caller supplies the
# Galois permutations; they are validated symbolically before use.

f4 = parse_unipoly("x^4 + 1", QQ_DOMAIN)
roots = [parse_unipoly(t, QQ_DOMAIN) for t in ("x", "x^3", "-x", "-x^3")]
gens = validated_root_permutations(f4, roots, [[1, 0, 3, 2], [2, 3, 0, 1]])
dec = web_decomposition_from_action(4, (1, 1, 1, 1), gens)
print("x^4+1 all singletons:", dec.factors)   # six copies of the quartic field

# ---------------------------------------------------------------------------
# The one-circle state space has the dot-power basis 1, a, ..., a^(N-1),
# and multiplication by the dot has characteristic polynomial f.

report = disk_dot_basis_check(parse_unipoly("x^3 + x + 1", zmod(2)))
print("dot-power basis independent:", report["independent"],
      "| char poly is f:", report["charpoly_is_f"])
