#!/usr/bin/env python3
"""Decorated surfaces: dots, defect circles, patched facets.

A walk through the surface evaluators.  Everything is exact: rational
numbers are fractions, finite fields are residue arithmetic.
"""

import random
from fractions import Fraction

from foamlib.fieldext import (
    FiniteFieldTower,
    nilpotent_square_algebra,
    scaling_automorphism,
)
from foamlib.surfgen import random_surface
from foamlib.tqft2d import (
    evaluate_coloring,
    evaluate_neck,
    genus2_three_defects,
    plain_torus,
    seamed_sphere,
    sphere_with_defect,
    torus_with_defect,
)

# ---------------------------------------------------------------------------
# A torus with one defect circle computes the trace of the automorphism.
#
# On the four-dimensional algebra k[a,b]/(a^2,b^2) with eps(ab) = 1, the
# scaling automorphism a -> 3a, b -> b/3 has eigenvalues 1, 3, 1/3, 1 on
# the basis (1, a, b, ab), so its trace is 3 + 2 + 1/3 = 16/3.

alg = nilpotent_square_algebra()
sigma = scaling_automorphism(alg, 3)
torus = torus_with_defect(alg, 0, sigma)
print("torus with scaling defect:", evaluate_neck(torus))   # 16/3
assert evaluate_neck(torus) == Fraction(16, 3)

# ---------------------------------------------------------------------------
# Field towers.  An undecorated torus labeled GF(4) evaluates to the
# dimension [GF(4):GF(2)] = 2, which is 0 in characteristic 2.

tower2 = FiniteFieldTower(2, [1, 2])
print("undecorated GF(4) torus:", evaluate_neck(plain_torus(tower2, 1)))

# ---------------------------------------------------------------------------
# Patched spheres.  For GF(3) < GF(9) < GF(81), the sphere with an F-disk
# and a K-disk joined along one seam evaluates through the relative trace:
# tr_{F/k}(tr_{K/F}(1)) = 2 * 2 = 4 = 1 mod 3.

tower3 = FiniteFieldTower(3, [1, 2, 4])
sphere = seamed_sphere(tower3, 1, 2)
print("seamed sphere S^2(1,1):", evaluate_neck(sphere))

# ---------------------------------------------------------------------------
# Two independent evaluators.  The neck-cutting state sum works in any
# backend; for separable towers there is also the spectral route: color
# every facet by an embedding into the splitting field.  They agree.

rng = random.Random(1)
for trial in range(5):
    surface = random_surface(tower3, rng)
    neck = evaluate_neck(surface)
    color = evaluate_coloring(surface)
    assert neck == color
    print(f"random surface {trial}: both evaluators give",
          tower3.ground.render(neck))

# ---------------------------------------------------------------------------
# The genus-two surface with three defect tubes counts the embeddings on
# which the three automorphisms agree.  With all three equal to the
# Frobenius on GF(81)/GF(3) every one of the 4 embeddings counts: 4 = 1
# mod 3.  With labels (frob, id, id) nothing survives.

quartic = FiniteFieldTower(3, [1, 4])
frob = quartic.frobenius_automorphism(1, 1)
ident = quartic.frobenius_automorphism(1, 0)
print("genus 2, (frob, frob, frob):",
      evaluate_neck(genus2_three_defects(quartic, 1, frob, frob, frob)))
print("genus 2, (frob, id, id):  ",
      evaluate_neck(genus2_three_defects(quartic, 1, frob, ident, ident)))

# ---------------------------------------------------------------------------
# A sphere cut by one defect circle with dots x, y on the two sides has
# the closed form eps(sigma(y) x) = eps(y sigma^{-1}(x)); the two readings
# agree because sigma preserves the trace.

sig9 = tower3.frobenius_automorphism(1, 1)
x = tower3.parse_element(1, "x + 1")
y = tower3.parse_element(1, "2*x")
sp = sphere_with_defect(tower3, 1, sig9, x, y)
lhs = tower3.trace_to_ground(1, tower3.mul(1, sig9(y), x))
rhs = tower3.trace_to_ground(1, tower3.mul(1, y, sig9.inverse()(x)))
assert evaluate_neck(sp) == lhs == rhs
print("dotted defect sphere:", tower3.ground.render(lhs), "(both readings)")
