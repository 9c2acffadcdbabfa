"""Sparse multivariate polynomials over the rationals.

A monomial is a tuple of (variable, exponent) pairs sorted by variable
name, exponents > 0; the empty tuple is the constant monomial.  A
MultiPoly is an immutable wrapper around {monomial: Fraction} with no zero
coefficients stored.  Printing uses graded-lexicographic term order
(higher total degree first, then lex on variable names), and parse_poly
accepts the same grammar it prints: integer/rational coefficients, `^`,
`*`, named variables, parentheses.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

Monomial = tuple[tuple[str, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    # merge two name-sorted tuples
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_mul_var(m: Monomial, u: str) -> Monomial:
    for idx in range(len(m)):
        v, e = m[idx]
        if v == u:
            return m[:idx] + ((u, e + 1),) + m[idx + 1:]
        if v > u:
            return m[:idx] + ((u, 1),) + m[idx:]
    return m + ((u, 1),)


class MultiPoly:
    """Coefficients are Fraction or int; ints are kept unwrapped since the
    two interoperate exactly and integer paths skip gcd normalization."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, (int, Fraction)):
                    c = Fraction(c)
                if c != 0:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        """Trusted constructor: canonical keys, no zero values."""
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    # -- constructors ---------------------------------------------------

    @staticmethod
    def const(c) -> "MultiPoly":
        return MultiPoly({(): c if isinstance(c, (int, Fraction)) else Fraction(c)})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        return MultiPoly({((name, 1),): 1})

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly()

    @staticmethod
    def one() -> "MultiPoly":
        return MultiPoly.const(1)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[str]:
        out = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def degree_in(self, var: str) -> int:
        best = 0
        for m in self.terms:
            for v, e in m:
                if v == var and e > best:
                    best = e
        return best

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {()}:
            raise ValueError(f"not a constant polynomial: {self.render()}")
        return self.terms[()]

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return MultiPoly._raw(out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) - c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return MultiPoly._raw(out)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if not self.terms or not other.terms:
            return MultiPoly()
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return MultiPoly._raw({m: c for m, c in out.items() if c})

    def scale(self, c) -> "MultiPoly":
        if not isinstance(c, (int, Fraction)):
            c = Fraction(c)
        if c == 0:
            return MultiPoly()
        return MultiPoly._raw({m: c * v for m, v in self.terms.items()})

    def mul_linear(self, u: str, v) -> "MultiPoly":
        """Fast multiply by (u - v), v a variable name or a constant."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            mu = _mono_mul_var(m, u)
            out[mu] = out.get(mu, 0) + c
        if isinstance(v, str):
            for m, c in self.terms.items():
                mv = _mono_mul_var(m, v)
                out[mv] = out.get(mv, 0) - c
        else:
            cv = v if isinstance(v, (int, Fraction)) else Fraction(v)
            if cv:
                for m, c in self.terms.items():
                    out[m] = out.get(m, 0) - cv * c
        return MultiPoly._raw({m: c for m, c in out.items() if c})

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative power")
        out = MultiPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- substitution -----------------------------------------------------

    def eval(self, assignment: Mapping[str, Fraction]) -> Fraction:
        """Exact full evaluation; every variable must be assigned."""
        total = Fraction(0)
        for m, c in self.terms.items():
            acc = c
            for v, e in m:
                if v not in assignment:
                    raise KeyError(f"variable {v!r} not assigned")
                acc *= Fraction(assignment[v]) ** e
            total += acc
        return total

    def subs_vars(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Rename variables (used to plug color sets into dot polynomials)."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            d: dict[str, int] = {}
            for v, e in m:
                w = mapping.get(v, v)
                d[w] = d.get(w, 0) + e
            mm = tuple(sorted(d.items()))
            out[mm] = out.get(mm, 0) + c
        return MultiPoly(out)

    def subs_values(self, assignment: Mapping[str, Fraction]) -> "MultiPoly":
        """Substitute values for a subset of the variables."""
        out = MultiPoly()
        for m, c in self.terms.items():
            coeff = c
            rest = []
            for v, e in m:
                if v in assignment:
                    coeff *= Fraction(assignment[v]) ** e
                else:
                    rest.append((v, e))
            out = out + MultiPoly({tuple(rest): coeff})
        return out

    def as_unipoly_in(self, var: str) -> list["MultiPoly"]:
        """Coefficient list (lowest degree first) of self viewed in one variable."""
        coeffs: list[dict[Monomial, Fraction]] = [
            {} for _ in range(self.degree_in(var) + 1)
        ]
        for m, c in self.terms.items():
            e = 0
            rest = []
            for v, ee in m:
                if v == var:
                    e = ee
                else:
                    rest.append((v, ee))
            key = tuple(rest)
            coeffs[e][key] = coeffs[e].get(key, 0) + c
        return [MultiPoly._raw({m: c for m, c in d.items() if c}) for d in coeffs]

    def mul_var(self, u: str) -> "MultiPoly":
        """Fast multiply by a single variable."""
        return MultiPoly._raw(
            {_mono_mul_var(m, u): c for m, c in self.terms.items()}
        )

    def divexact_linear(self, u: str, v) -> "MultiPoly":
        """Exact division by (u - v), v a variable name or a Fraction.

        Synthetic division in u; raises if the remainder is nonzero.
        """
        cs = self.as_unipoly_in(u)
        if len(cs) == 1 and cs[0].is_zero():
            return MultiPoly()
        quot: list[MultiPoly] = [MultiPoly.zero()] * (len(cs) - 1)
        carry = MultiPoly.zero()
        for e in range(len(cs) - 1, 0, -1):
            q = cs[e] + carry
            quot[e - 1] = q
            carry = q.mul_var(v) if isinstance(v, str) else q.scale(v)
        rem = cs[0] + carry
        if not rem.is_zero():
            raise ArithmeticError(f"division by ({u} - {v}) is not exact")
        out = MultiPoly.zero()
        for e in range(len(quot) - 1, -1, -1):
            out = out.mul_var(u) + quot[e]
        return out

    # -- printing --------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"

        def key(m: Monomial):
            deg = sum(e for _, e in m)
            # graded: higher degree first; then lex on names/exponents
            return (-deg, tuple((v, -e) for v, e in m))

        parts = []
        for m in sorted(self.terms, key=key):
            c = self.terms[m]
            neg = c < 0
            c = abs(c)
            factors = []
            for v, e in m:
                factors.append(v if e == 1 else f"{v}^{e}")
            if not factors:
                body = str(c)
            elif c == 1:
                body = "*".join(factors)
            else:
                body = str(c) + "*" + "*".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.render()})"


def esym(variables: Iterable[str], k: int) -> MultiPoly:
    """Elementary symmetric polynomial e_k of the named variables."""
    vs = list(variables)
    if not 0 <= k <= len(vs):
        raise ValueError(f"e_{k} undefined for {len(vs)} variables")
    e = [MultiPoly.one()] + [MultiPoly.zero()] * k
    for v in vs:
        vp = MultiPoly.var(v)
        for j in range(min(k, len(e) - 1), 0, -1):
            e[j] = e[j] + vp * e[j - 1]
    return e[k]


def power_sum(variables: Iterable[str], k: int) -> MultiPoly:
    out = MultiPoly.zero()
    for v in variables:
        out = out + MultiPoly.var(v) ** k
    return out


def is_symmetric(p: MultiPoly, variables: list[str]) -> bool:
    """Invariance under adjacent transpositions of the listed variables."""
    for i in range(len(variables) - 1):
        a, b = variables[i], variables[i + 1]
        if p.subs_vars({a: b, b: a}) != p:
            return False
    return True


def eval_multi(p: MultiPoly, assignment: Mapping[str, Fraction]) -> Fraction:
    """Exact substitution value of p under a full variable assignment."""
    return p.eval(assignment)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()/]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        if m.group("num"):
            out.append(("num", int(m.group("num"))))
        elif m.group("var"):
            out.append(("var", m.group("var")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> MultiPoly:
        kind, val = self.peek()
        sign = 1
        while kind == "op" and val in "+-":
            self.take()
            if val == "-":
                sign = -sign
            kind, val = self.peek()
        out = self.term().scale(sign)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                nxt = self.term()
                out = out + (nxt if val == "+" else -nxt)
            else:
                return out

    def term(self) -> MultiPoly:
        out = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                out = out * self.factor()
            else:
                return out

    def factor(self) -> MultiPoly:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            return base**e
        return base

    def atom(self) -> MultiPoly:
        kind, val = self.take()
        if kind == "num":
            # rational literal p/q
            k2, v2 = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3 = self.take()
                if k3 != "num":
                    raise ValueError("expected integer after '/'")
                return MultiPoly.const(Fraction(val, v3))
            return MultiPoly.const(val)
        if kind == "var":
            return MultiPoly.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val = self.take()
            if (kind, val) != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if kind == "op" and val == "-":
            return -self.factor()
        raise ValueError(f"unexpected token {val!r}")


def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical polynomial grammar into a MultiPoly over QQ."""
    parser = _Parser(_tokenize(text))
    out = parser.expr()
    if parser.i != len(parser.tokens):
        raise ValueError(f"trailing input in {text!r}")
    return out


def parse_unipoly(text: str, dom, var: str = "x"):
    """Parse a one-variable polynomial and map coefficients into dom."""
    from .unipoly import UniPoly

    p = parse_poly(text)
    extra = p.variables() - {var}
    if extra:
        raise ValueError(f"unexpected variables {sorted(extra)} (wanted only {var!r})")
    coeffs = [dom.zero] * (p.degree_in(var) + 1)
    for m, c in p.terms.items():
        e = m[0][1] if m else 0
        coeffs[e] = dom.add(coeffs[e], dom.of(c))
    return UniPoly(dom, coeffs)
