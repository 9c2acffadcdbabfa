#!/usr/bin/env python3
"""One-variable Jacobi algebras: residue trace versus field trace.

For monic squarefree f the algebra k[x]/(f) carries two natural traces:
the field/companion trace of multiplication operators, and the residue
trace tr_G (the x^(n-1) coefficient of the reduction).  They differ by
multiplication by f', and the handle element of the residue-trace
Frobenius structure is exactly f' mod f.
"""

from foamlib.exactalg import UniPoly, companion_trace, parse_unipoly
from foamlib.exactalg.scalars import QQ_DOMAIN, zmod
from foamlib.mftrace import (
    JacobiAlgebra,
    as_frobenius_backend,
    grothendieck_trace,
    handle_is_hessian,
    hessian_relation_check,
    jacobi_idempotent_traces,
    residue_sum_trace,
)
from foamlib.tqft2d import evaluate_neck, plain_torus

# ---------------------------------------------------------------------------
# tr_G by coefficient extraction: no roots needed.

J = JacobiAlgebra(parse_unipoly("x^2 - 2", QQ_DOMAIN))
x = UniPoly.x(QQ_DOMAIN)
one = UniPoly.one(QQ_DOMAIN)
print("tr_G(1)   =", grothendieck_trace(one, J))     # 0
print("tr_G(x)   =", grothendieck_trace(x, J))       # 1
print("tr_G(x^2) =", grothendieck_trace(x * x, J))   # 0: x^2 reduces to 2

# The classical residue-sum definition sum p(r)/f'(r) over the roots r
# agrees; over finite fields the roots are computable, so both paths run.

J2 = JacobiAlgebra(parse_unipoly("x^3 + x + 1", zmod(2)))
p = parse_unipoly("x^4 + x", zmod(2))
coeff_way = grothendieck_trace(p, J2)
roots_way = residue_sum_trace(p, J2, 3)
print("GF(2) cross-check:", coeff_way, "embeds to", roots_way)

# ---------------------------------------------------------------------------
# The Hessian relation tr_{F/k}(p) = tr_G(f' p), as an identity of linear
# maps (checked on a spanning set and random samples).

for text in ("x^3 - x - 1", "x^6 - x - 1"):
    J3 = JacobiAlgebra(parse_unipoly(text, QQ_DOMAIN))
    fp = J3.f.derivative()
    assert companion_trace(x, J3.f) == grothendieck_trace(fp * x, J3)
    print(f"hessian relation for {text}:",
          hessian_relation_check(J3, trials=10))

# ---------------------------------------------------------------------------
# Idempotent traces over a splitting field: tr_G(e_k) = 1/f'(root_k),
# while the extended field trace of every minimal idempotent is 1.

pairs = jacobi_idempotent_traces(J2, 3)
print("idempotent traces over GF(8):",
      [(tuple(root), tuple(val)) for root, val in pairs])

# ---------------------------------------------------------------------------
# The Jacobi algebra as a surface backend.  Its handle element is f', so
# a torus evaluates to tr_G(f') = deg f in characteristic zero.

J4 = JacobiAlgebra(parse_unipoly("x^5 + x + 1", QQ_DOMAIN))
backend = as_frobenius_backend(J4)
assert handle_is_hessian(J4)
print("torus in the Jacobi backend:", evaluate_neck(plain_torus(backend, 0)))
