"""foamlib: exact-arithmetic evaluation of decorated surfaces and state sums.

Everything in this library is computed exactly: rational numbers are
`fractions.Fraction`, finite fields are explicit residue arithmetic, and
there is no floating point anywhere.  Subpackages:

  exactalg  -- rationals, univariate/multivariate polynomials, GF(p^n)
  fieldext  -- Frobenius-algebra backends (field towers, number fields,
               structure-constant tables), traces, dual bases, idempotents
  tqft2d    -- decorated/patched closed surfaces and their two evaluators
  sylfoam   -- R-products, Sylvester double sums, overlapping flower foams
  mftrace   -- one-variable Jacobi algebras and the residue trace
  wreathrep -- iterated wreath products of S2 and their character data
  webgal    -- q-multinomials and Galois orbit decompositions of webs
  cli       -- command line front end (`foamlib ...`)
"""

__version__ = "0.1.0"
