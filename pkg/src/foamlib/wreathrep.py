"""Iterated wreath products of S2: tree automorphisms and their checks.

G(n) is the symmetry group of the full binary tree of depth n, presented
by one swap bit per internal node (breadth-first order, 2^n - 1 bits).
Where the root bit is b and the subtrees act by s_L, s_R on the two
halves of the leaf set, the leaf permutation is

    sigma = beta^b o (s_L x s_R),      beta = the half-swap

so the bit arrays biject onto the subgroup of S(2^n) and composition is
done at the permutation level.  Permutations are tuples perm[i] = image
of i, 0-indexed; printed cycles are 1-indexed to match the usual
conventions.

The dihedral character data for G(2) lives here as an explicit table and
is verified (orthogonality, restriction to the permutation module, the
tensor decompositions) rather than derived.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction


# ---------------------------------------------------------------------------
# Permutations


def p_identity(n_points: int) -> tuple:
    return tuple(range(n_points))


def p_compose(p: tuple, q: tuple) -> tuple:
    """(p o q)(i) = p(q(i)): q acts first."""
    return tuple(p[q[i]] for i in range(len(p)))


def p_inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


def p_cycles(p: tuple) -> list[tuple]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_string(p: tuple) -> str:
    cycles = p_cycles(p)
    if not cycles:
        return "e"
    return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cycles)


# ---------------------------------------------------------------------------
# Tree automorphisms


@dataclass(frozen=True)
class TreeAutomorphism:
    depth: int
    bits: tuple[int, ...]

    def __post_init__(self):
        want = 2**self.depth - 1
        if len(self.bits) != want:
            raise ValueError(f"depth {self.depth} needs {want} bits")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")


def beta_perm(n: int) -> tuple:
    """The branch swap on 2^n leaves: i <-> i + 2^(n-1)."""
    h = 2 ** (n - 1)
    return tuple((i + h) % (2 * h) for i in range(2 * h))


def to_permutation(t: TreeAutomorphism) -> tuple:
    """Leaf action, computed recursively down the bit tree."""
    def rec(node: int, depth: int) -> tuple:
        if depth == 0:
            return (0,)
        half = rec(2 * node + 1, depth - 1)
        other = rec(2 * node + 2, depth - 1)
        h = 2 ** (depth - 1)
        block = tuple(half[i] for i in range(h)) + tuple(other[i] + h for i in range(h))
        if t.bits[node]:
            return tuple((block[i] + h) % (2 * h) for i in range(2 * h))
        return block

    return rec(0, t.depth)


def from_permutation(n: int, perm: tuple) -> TreeAutomorphism:
    """Decompose a leaf permutation into swap bits; raises if not in G(n)."""
    bits = [0] * (2**n - 1)

    def rec(node: int, depth: int, p: tuple):
        if depth == 0:
            return
        size = len(p)
        h = size // 2
        first_half = {p[i] for i in range(h)}
        if first_half == set(range(h)):
            bits[node] = 0
            base = p
        elif first_half == set(range(h, size)):
            bits[node] = 1
            base = tuple((p[i] + h) % size for i in range(size))
        else:
            raise ValueError(f"{cycle_string(perm)} is not a tree symmetry")
        left = tuple(base[i] for i in range(h))
        right = tuple(base[i + h] - h for i in range(h))
        rec(2 * node + 1, depth - 1, left)
        rec(2 * node + 2, depth - 1, right)

    rec(0, n, perm)
    return TreeAutomorphism(n, tuple(bits))


def all_elements(n: int) -> list[tuple]:
    """Every element of G(n) as a leaf permutation (2^(2^n - 1) of them)."""
    out = []
    for bits in itertools.product((0, 1), repeat=2**n - 1):
        out.append(to_permutation(TreeAutomorphism(n, bits)))
    return out


def generators(n: int) -> list[tuple]:
    """Swap generators: one beta per internal node, embedded in S(2^n)."""
    gens = []
    size = 2**n

    def emb(node: int, depth: int, offset: int):
        if depth == 0:
            return
        bits = [0] * (2**n - 1)
        bits[node] = 1
        gens.append(to_permutation(TreeAutomorphism(n, tuple(bits))))
        emb(2 * node + 1, depth - 1, offset)
        emb(2 * node + 2, depth - 1, offset + 2 ** (depth - 1))

    emb(0, n, 0)
    return gens


def center_element(n: int) -> tuple:
    """c(n) = (1,2)(3,4)...(2^n - 1, 2^n); c(0) is the identity."""
    if n == 0:
        return (0,)
    size = 2**n
    return tuple(i + 1 if i % 2 == 0 else i - 1 for i in range(size))


def embed_block(perm: tuple, total: int, offset: int) -> tuple:
    """Make perm act on [offset, offset + len(perm)) inside S(total)."""
    out = list(range(total))
    for i, img in enumerate(perm):
        out[offset + i] = offset + img
    return tuple(out)


# ---------------------------------------------------------------------------
# Group facts


def group_facts(n: int) -> dict:
    if n > 4:
        raise ValueError("full enumeration is desk-scale only (n <= 4)")
    elems = all_elements(n)
    report = {}
    report["order"] = len(set(elems))
    report["order_expected"] = 2 ** (2**n - 1)
    report["order_ok"] = report["order"] == report["order_expected"] == len(elems)

    gens = generators(n)
    cn = center_element(n)
    # the centralizer of a generating set is the center
    center = [g for g in elems if all(p_compose(g, s) == p_compose(s, g)
                                      for s in gens)]
    ident = p_identity(2**n)
    report["center_ok"] = sorted(center) == sorted([ident, cn]) if n >= 1 else True

    # coset decomposition along the index-two subgroup
    h_elems = {
        to_permutation(TreeAutomorphism(n, bits))
        for bits in itertools.product((0, 1), repeat=2**n - 1)
        if bits[0] == 0
    }
    beta = beta_perm(n)
    beta_coset = {p_compose(g, beta) for g in h_elems}
    report["coset_ok"] = (
        h_elems | beta_coset == set(elems)
        and not (h_elems & beta_coset)
        and beta_coset == {p_compose(beta, g) for g in h_elems}
    )

    # beta conjugation swaps the two factors
    half = 2 ** (n - 1)
    twist_ok = True
    for g in generators(n - 1) if n >= 2 else []:
        left = embed_block(g, 2**n, 0)
        right = embed_block(g, 2**n, half)
        if p_compose(p_compose(beta, left), beta) != right:
            twist_ok = False
        if p_compose(p_compose(beta, right), beta) != left:
            twist_ok = False
    report["twist_ok"] = twist_ok
    report["ok"] = all(report[k] for k in
                       ("order_ok", "center_ok", "coset_ok", "twist_ok"))
    return report


def mackey_orbit_check(n: int) -> dict:
    """H x H orbits on G(n), H = G(n-1) x G(n-1): two orbits of size |H|."""
    if n > 4:
        raise ValueError("desk-scale only (n <= 4)")
    size = 2**n
    half = size // 2
    hgens = []
    for g in generators(n - 1):
        hgens.append(embed_block(g, size, 0))
        hgens.append(embed_block(g, size, half))
    elems = set(all_elements(n))

    def orbit_of(x):
        seen = {x}
        stack = [x]
        while stack:
            cur = stack.pop()
            for s in hgens:
                for nxt in (p_compose(s, cur), p_compose(cur, s)):
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
        return seen

    ident = p_identity(size)
    beta = beta_perm(n)
    o1 = orbit_of(ident)
    o2 = orbit_of(beta)
    h_order = 2 ** (2**n - 2)
    report = {
        "orbit_sizes": sorted((len(o1), len(o2))),
        "two_orbits_cover": o1 | o2 == elems and not (o1 & o2),
        "sizes_ok": len(o1) == len(o2) == h_order,
    }
    # twist identity h beta = beta tau(h) on generators
    twist_ok = True
    for g in generators(n - 1):
        left = embed_block(g, size, 0)
        right = embed_block(g, size, half)
        if p_compose(left, beta) != p_compose(beta, right):
            twist_ok = False
        if p_compose(right, beta) != p_compose(beta, left):
            twist_ok = False
    report["twist_ok"] = twist_ok
    report["ok"] = report["two_orbits_cover"] and report["sizes_ok"] and twist_ok
    return report


# ---------------------------------------------------------------------------
# Group algebra elements


class GroupAlgElem:
    """Sparse rational group-algebra element keyed by leaf permutations."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        self.coeffs = {}
        for perm, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                self.coeffs[perm] = c

    @staticmethod
    def of_perm(n: int, perm: tuple, c=1) -> "GroupAlgElem":
        return GroupAlgElem(n, {perm: Fraction(c)})

    @staticmethod
    def unit(n: int) -> "GroupAlgElem":
        return GroupAlgElem.of_perm(n, p_identity(2**n))

    def __add__(self, other):
        out = dict(self.coeffs)
        for perm, c in other.coeffs.items():
            out[perm] = out.get(perm, Fraction(0)) + c
        return GroupAlgElem(self.n, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for perm, c in other.coeffs.items():
            out[perm] = out.get(perm, Fraction(0)) - c
        return GroupAlgElem(self.n, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupAlgElem(
                self.n, {p: c * other for p, c in self.coeffs.items()}
            )
        out = {}
        for p1, c1 in self.coeffs.items():
            for p2, c2 in other.coeffs.items():
                p = p_compose(p1, p2)
                out[p] = out.get(p, Fraction(0)) + c1 * c2
        return GroupAlgElem(self.n, out)

    __rmul__ = __mul__

    def conjugate_by(self, s: tuple) -> "GroupAlgElem":
        s_inv = p_inverse(s)
        return GroupAlgElem(
            self.n,
            {p_compose(p_compose(s, p), s_inv): c for p, c in self.coeffs.items()},
        )

    def __eq__(self, other):
        return isinstance(other, GroupAlgElem) and self.n == other.n \
            and self.coeffs == other.coeffs

    def is_central(self) -> bool:
        return all(self.conjugate_by(s) == self for s in generators(self.n))

    def __repr__(self):
        parts = [f"{c}*{cycle_string(p)}" for p, c in sorted(self.coeffs.items())]
        return " + ".join(parts) if parts else "0"


def copy_of_center_element(n: int, k: int, index: int) -> tuple:
    """c(k)^(index): the center of the index-th copy of G(k) inside G(n).

    The copies sit over the 2^(n-k) depth-(n-k) nodes, blocks of 2^k leaves.
    """
    block = 2**k
    return embed_block(center_element(k), 2**n, index * block)


def central_element_checks(n: int) -> dict:
    report = {}
    cn = GroupAlgElem.of_perm(n, center_element(n))
    report["c_n_central"] = cn.is_central()
    report["c_n_squared_is_one"] = (cn * cn) == GroupAlgElem.unit(n)
    if n >= 1:
        z = GroupAlgElem.of_perm(n, copy_of_center_element(n, n - 1, 0)) + \
            GroupAlgElem.of_perm(n, copy_of_center_element(n, n - 1, 1))
        report["one_dot_bubble_central"] = z.is_central()
    if n >= 2:
        z4 = GroupAlgElem(n)
        for i in range(4):
            z4 = z4 + GroupAlgElem.of_perm(n, copy_of_center_element(n, n - 2, i))
        report["four_dot_bubble_central"] = z4.is_central()
    # the inductive description of c_n (the base case is c_1 itself)
    if n >= 2:
        paired = p_compose(
            copy_of_center_element(n, n - 1, 0), copy_of_center_element(n, n - 1, 1)
        )
        report["c_n_inductive"] = paired == center_element(n)
    report["ok"] = all(v for k, v in report.items() if k != "ok")
    return report


def epm_idempotent_check(n: int) -> dict:
    beta = GroupAlgElem.of_perm(n, beta_perm(n))
    one = GroupAlgElem.unit(n)
    half = Fraction(1, 2)
    e_plus = (one + beta) * half
    e_minus = (one - beta) * half
    report = {
        "beta_squared_is_one": (beta * beta) == one,
        "sum_is_one": (e_plus + e_minus) == one,
        "e_plus_idempotent": (e_plus * e_plus) == e_plus,
        "e_minus_idempotent": (e_minus * e_minus) == e_minus,
        "orthogonal": (e_plus * e_minus) == GroupAlgElem(n),
    }
    report["ok"] = all(report.values())
    return report


# ---------------------------------------------------------------------------
# Conjugacy classes


def conjugacy_classes(n: int) -> list[list[tuple]]:
    """Orbit refinement under generator conjugation; no full table built."""
    elems = all_elements(n)
    gens = generators(n)
    gen_invs = [p_inverse(g) for g in gens]
    seen = set()
    classes = []
    for e in elems:
        if e in seen:
            continue
        orbit = {e}
        stack = [e]
        while stack:
            cur = stack.pop()
            for g, gi in zip(gens, gen_invs):
                img = p_compose(p_compose(g, cur), gi)
                if img not in seen and img not in orbit:
                    orbit.add(img)
                    stack.append(img)
        seen |= orbit
        classes.append(sorted(orbit))
    return classes


# ---------------------------------------------------------------------------
# The dihedral table


def _d4_classes():
    """The five classes of G(2), ordered to match the stored table:
    identity, transpositions, the central double swap, four-cycles, the
    off-diagonal double swaps."""
    classes = conjugacy_classes(2)
    ident = p_identity(4)
    cn = center_element(2)

    def classify(cls):
        rep = cls[0]
        moved = sum(1 for i in range(4) if rep[i] != i)
        cycles = p_cycles(rep)
        if rep == ident:
            return 0
        if moved == 2:
            return 1
        if rep == cn:
            return 2
        if len(cycles) == 1:
            return 3
        return 4

    ordered = [None] * 5
    for cls in classes:
        ordered[classify(cls)] = cls
    if any(c is None for c in ordered):
        raise AssertionError("G(2) does not have the expected five classes")
    return ordered


D4_CHARACTERS = {
    "V": (2, 0, -2, 0, 0),
    "V+": (1, 1, 1, 1, 1),
    "V-": (1, 1, 1, -1, -1),
    "V-+": (1, -1, 1, -1, 1),
    "V--": (1, -1, 1, 1, -1),
}

D4_PERMUTATION_ROW = (4, 2, 0, 0, 0)  # k[D4/H] for H = {e, (34)}


def _char_inner(classes, chi1, chi2) -> Fraction:
    order = sum(len(c) for c in classes)
    total = Fraction(0)
    for cls, a, b in zip(classes, chi1, chi2):
        total += len(cls) * Fraction(a) * Fraction(b)
    return total / order


def _induced_character(classes, subgroup: set, sub_char) -> tuple:
    """chi_Ind(g) = (1/|H|) sum over x in G with x^-1 g x in H of chi(x^-1gx)."""
    elems = [g for cls in classes for g in cls]
    out = []
    for cls in classes:
        g = cls[0]
        total = Fraction(0)
        for x in elems:
            xi = p_inverse(x)
            conj = p_compose(p_compose(xi, g), x)
            if conj in subgroup:
                total += Fraction(sub_char(conj))
        out.append(total / len(subgroup))
    return tuple(out)


def d4_table_check(seed: int = 0) -> dict:
    classes = _d4_classes()
    report = {}
    report["class_sizes"] = [len(c) for c in classes]
    report["classes_ok"] = sorted(report["class_sizes"]) == [1, 1, 2, 2, 2]

    chars = D4_CHARACTERS
    names = list(chars)
    # orthogonality: the five rows are orthonormal
    ortho = all(
        _char_inner(classes, chars[a], chars[b]) == (1 if a == b else 0)
        for a in names
        for b in names
    )
    report["orthogonality_ok"] = ortho
    report["sum_of_squares_ok"] = sum(chars[a][0] ** 2 for a in names) == 8

    # permutation character of D4/H for H = {e, (34)}
    trans34 = (0, 1, 3, 2)
    H = {p_identity(4), trans34}
    elems = [g for cls in classes for g in cls]
    cosets = []
    seen = set()
    for g in elems:
        coset = frozenset(p_compose(g, h) for h in H)
        if coset not in seen:
            seen.add(coset)
            cosets.append(coset)
    perm_char = []
    for cls in classes:
        g = cls[0]
        fixed = sum(
            1 for coset in cosets
            if frozenset(p_compose(g, x) for x in coset) == coset
        )
        perm_char.append(fixed)
    report["perm_char"] = tuple(perm_char)
    report["perm_char_ok"] = tuple(perm_char) == D4_PERMUTATION_ROW
    want = tuple(
        chars["V"][i] + chars["V+"][i] + chars["V-"][i] for i in range(5)
    )
    report["perm_decomposition_ok"] = tuple(perm_char) == want

    # tensor decompositions
    vv = tuple(chars["V"][i] * chars["V"][i] for i in range(5))
    four = tuple(
        chars["V+"][i] + chars["V-"][i] + chars["V-+"][i] + chars["V--"][i]
        for i in range(5)
    )
    report["tensor_square_ok"] = vv == four
    vvm = tuple(chars["V"][i] * chars["V-"][i] for i in range(5))
    report["v_times_sign_ok"] = vvm == chars["V"]

    # induction-restriction: Ind(Res M) = Ind(1) (x) M at character level
    rng = random.Random(seed)
    indres_ok = True
    subgroups = [H, {p_identity(4), (1, 0, 2, 3), trans34,
                     p_compose((1, 0, 2, 3), trans34)}]
    for subgroup in subgroups:
        ind1 = _induced_character(classes, subgroup, lambda h: 1)
        for _ in range(5):
            virt = [rng.randint(-3, 3) for _ in names]
            chi_m = tuple(
                sum(virt[j] * chars[nm][i] for j, nm in enumerate(names))
                for i in range(5)
            )
            lhs = _induced_character(
                classes, subgroup,
                lambda h, cm=chi_m: _value_at(classes, cm, h),
            )
            rhs = tuple(ind1[i] * chi_m[i] for i in range(5))
            if lhs != rhs:
                indres_ok = False
    report["ind_res_ok"] = indres_ok

    report["ok"] = all(
        report[k] for k in (
            "classes_ok", "orthogonality_ok", "sum_of_squares_ok",
            "perm_char_ok", "perm_decomposition_ok", "tensor_square_ok",
            "v_times_sign_ok", "ind_res_ok",
        )
    )
    return report


def _value_at(classes, char_tuple, g):
    for cls, val in zip(classes, char_tuple):
        if g in cls:
            return val
    raise KeyError(f"{cycle_string(g)} not in any class")


# ---------------------------------------------------------------------------
# Labeled-tree count of irreducible representations


def oor_irrep_count(n: int) -> int:
    """Isomorphism classes of sign-labeled depth-(n-1) trees.

    A minus at a vertex forces its two subtrees to be identical (as
    classes); a plus allows an unordered pair.  count(1) = 2 and
    count(n) = k(k-1)/2 + 2k for k = count(n-1).
    """
    if n < 1:
        raise ValueError("n >= 1")
    count = 2
    for _ in range(n - 1):
        count = count * (count - 1) // 2 + 2 * count
    return count


def oor_count_cross_check(n: int) -> dict:
    trees = oor_irrep_count(n)
    classes = len(conjugacy_classes(n))
    return {"tree_count": trees, "class_count": classes, "ok": trees == classes}
