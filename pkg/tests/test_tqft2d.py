import random
from fractions import Fraction

import pytest

from foamlib.fieldext import (
    FiniteFieldTower,
    nilpotent_square_algebra,
    scaling_automorphism,
)
from foamlib.surfgen import random_surface
from foamlib.tqft2d import (
    DecoratedSurface,
    Facet,
    Seam,
    SurfaceError,
    disjoint_union,
    evaluate_coloring,
    evaluate_neck,
    genus2_three_defects,
    plain_torus,
    seamed_sphere,
    skein_rewrite,
    skein_rewrite_check,
    sphere_with_defect,
    surface_from_json,
    torus_with_defect,
    validate,
)


TOWER3 = FiniteFieldTower(3, [1, 2, 4])
TOWER2 = FiniteFieldTower(2, [1, 2])
QUARTIC = FiniteFieldTower(3, [1, 4])


# ------------------------------------------------------------------- validate

def test_validate_plain_torus():
    s = plain_torus(TOWER2, 1)
    rep = validate(s)
    assert rep["ok"] and rep["euler_characteristics"] == [0]


def test_validate_cut_torus():
    s = torus_with_defect(TOWER2, 1, TOWER2.frobenius_automorphism(1, 1))
    rep = validate(s)
    assert rep["ok"] and rep["euler_characteristics"] == [0]


def test_validate_rejects_label_mismatch():
    f1 = Facet("a", 0, 1, (), ("c",))
    f2 = Facet("b", 0, 1, (), ("c",))
    seam = Seam("inclusion", ("a", "c"), ("b", "c"))
    rep = validate(DecoratedSurface(TOWER3, (f1, f2), (seam,)))
    assert not rep["ok"]


def test_validate_rejects_dangling_circle():
    f = Facet("a", 0, 1, (), ("c",))
    rep = validate(DecoratedSurface(TOWER3, (f,), ()))
    assert not rep["ok"]


# ------------------------------------------------------- paper-pinned values

def test_torus_sigma_table_16_thirds():
    alg = nilpotent_square_algebra()
    sig = scaling_automorphism(alg, 3)
    val = evaluate_neck(torus_with_defect(alg, 0, sig))
    assert val == Fraction(16, 3)
    # closed form lambda + 2 + 1/lambda at a second value
    sig7 = scaling_automorphism(alg, Fraction(7))
    assert evaluate_neck(torus_with_defect(alg, 0, sig7)) == \
        Fraction(7) + 2 + Fraction(1, 7)


def test_undecorated_torus_gf4():
    assert evaluate_neck(plain_torus(TOWER2, 1)) == TOWER2.zero(0)


def test_seamed_sphere_tower3():
    # tr_F/k(tr_K/F(1)) = 2*2 = 1 mod 3
    s = seamed_sphere(TOWER3, 1, 2)
    assert evaluate_neck(s) == TOWER3.one(0)
    assert evaluate_coloring(s) == TOWER3.one(0)


def test_seamed_sphere_relative_trace_rule_with_dots():
    rng = random.Random(2)
    for _ in range(10):
        a = TOWER3.random_element(1, rng)
        b = TOWER3.random_element(2, rng)
        s = seamed_sphere(TOWER3, 1, 2, a, b)
        want = TOWER3.trace_to_ground(
            1, TOWER3.mul(1, a, TOWER3.relative_trace(b, 2, 1))
        )
        assert evaluate_neck(s) == want
        assert evaluate_coloring(s) == want


def test_genus2_three_defects_family():
    fr = QUARTIC.frobenius_automorphism(1, 1)
    ident = QUARTIC.frobenius_automorphism(1, 0)
    val = evaluate_neck(genus2_three_defects(QUARTIC, 1, fr, fr, fr))
    assert val == QUARTIC.one(0)  # 4 = 1 mod 3
    val0 = evaluate_neck(genus2_three_defects(QUARTIC, 1, fr, ident, ident))
    assert val0 == QUARTIC.zero(0)


def test_torus_frobenius_fixed_roots():
    # evaluation counts roots fixed by frob^k: n when k = 0 mod n, else 0
    for k in range(4):
        sig = QUARTIC.frobenius_automorphism(1, k)
        t = torus_with_defect(QUARTIC, 1, sig)
        want = QUARTIC.ground.of(4) if k % 4 == 0 else QUARTIC.zero(0)
        assert evaluate_neck(t) == want
        assert evaluate_coloring(t) == want


# ----------------------------------------------------- evaluator cross-check

def test_evaluator_agreement_random():
    rng = random.Random(42)
    for _ in range(60):
        s = random_surface(TOWER3, rng)
        assert evaluate_neck(s) == evaluate_coloring(s)


def test_evaluator_agreement_torus_family():
    rng = random.Random(7)
    for level in (1, 2):
        for _ in range(10):
            s = random_surface(TOWER3, rng, max_facets=3, max_seams=4,
                               levels=[0, level])
            assert evaluate_neck(s) == evaluate_coloring(s)


def test_evaluator_agreement_nonprime_ground():
    # towers whose ground field is itself an extension: GF(4) < GF(16)
    tower = FiniteFieldTower(2, [2, 4])
    rng = random.Random(5)
    for _ in range(15):
        s = random_surface(tower, rng)
        assert evaluate_neck(s) == evaluate_coloring(s)
    tower9 = FiniteFieldTower(3, [2, 4])
    for _ in range(10):
        s = random_surface(tower9, rng)
        assert evaluate_neck(s) == evaluate_coloring(s)


def test_evaluator_agreement_number_field():
    from foamlib.fieldext import make_backend

    nf = make_backend({"kind": "numberfield", "f": "x^2-2",
                       "roots": ["x", "-x"]})
    conj = nf.automorphism_by_root(1)
    ident = nf.identity_automorphism()
    # trace of conjugation on the quadratic field is 0; of identity, 2
    t_conj = torus_with_defect(nf, 1, conj)
    t_id = torus_with_defect(nf, 1, ident)
    assert evaluate_neck(t_conj) == evaluate_coloring(t_conj) == 0
    assert evaluate_neck(t_id) == evaluate_coloring(t_id) == 2
    rng = random.Random(3)
    for _ in range(15):
        s = random_surface(nf, rng, max_facets=4, max_seams=4)
        assert evaluate_neck(s) == evaluate_coloring(s)


def test_evaluator_agreement_biquadratic():
    from foamlib.fieldext import make_backend

    bi = make_backend({"kind": "numberfield", "f": "x^4+1",
                       "roots": ["x", "x^3", "-x", "-x^3"]})
    rng = random.Random(11)
    for idx in range(4):
        sig = bi.automorphism_by_root(idx)
        t = torus_with_defect(bi, 1, sig)
        want = 4 if sig.is_identity() else 0
        assert evaluate_neck(t) == evaluate_coloring(t) == want
    for _ in range(10):
        s = random_surface(bi, rng, max_facets=3, max_seams=3)
        assert evaluate_neck(s) == evaluate_coloring(s)


# --------------------------------------------------------- invariants

def test_dual_basis_independence():
    rng = random.Random(5)
    for _ in range(10):
        s = random_surface(TOWER3, rng, max_facets=3, max_seams=4)
        pairs = {
            lv: TOWER3.randomized_dual_pair(lv, rng)
            for lv in range(TOWER3.num_levels)
        }
        assert evaluate_neck(s) == evaluate_neck(s, dual_pairs=pairs)


def test_defect_composition():
    # two parallel circles sigma1, sigma2 equal one circle sigma1 then sigma2
    rng = random.Random(9)
    be = TOWER3
    s1 = be.frobenius_automorphism(2, 1)
    s2 = be.frobenius_automorphism(2, 3)
    for _ in range(5):
        x = be.random_element(2, rng)
        y = be.random_element(2, rng)
        # sphere: src disk (dot x) | sigma1 | middle annulus | sigma2 | tgt disk (dot y)
        f1 = Facet("d1", 0, 2, (x,), ("a",))
        f2 = Facet("mid", 0, 2, (), ("b1", "b2"))
        f3 = Facet("d2", 0, 2, (y,), ("c",))
        two = DecoratedSurface(be, (f1, f2, f3), (
            Seam("defect", ("d1", "a"), ("mid", "b1"), s1),
            Seam("defect", ("mid", "b2"), ("d2", "c"), s2),
        ))
        one = sphere_with_defect(be, 2, s1.compose(s2), x, y)
        assert evaluate_neck(two) == evaluate_neck(one)
        assert evaluate_coloring(two) == evaluate_coloring(one)


def test_defect_composition_noncommutative_table():
    # scaling and swap automorphisms of k[a,b]/(a^2,b^2) do not commute
    alg = nilpotent_square_algebra()
    scale = scaling_automorphism(alg, 5)
    swap = alg.matrix_automorphism(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], name="swap"
    )
    assert scale.compose(swap).action != swap.compose(scale).action
    x = alg.parse_element(0, "1 + 2*a")
    y = alg.parse_element(0, "b + ab")
    f1 = Facet("d1", 0, 0, (x,), ("a",))
    f2 = Facet("mid", 0, 0, (), ("b1", "b2"))
    f3 = Facet("d2", 0, 0, (y,), ("c",))
    for first, second in [(scale, swap), (swap, scale)]:
        two = DecoratedSurface(alg, (f1, f2, f3), (
            Seam("defect", ("d1", "a"), ("mid", "b1"), first),
            Seam("defect", ("mid", "b2"), ("d2", "c"), second),
        ))
        # a chain crossed first-then-second merges to first.compose(second)
        one = DecoratedSurface(alg, (f1, f3), (
            Seam("defect", ("d1", "a"), ("d2", "c"), first.compose(second)),
        ))
        assert evaluate_neck(two) == evaluate_neck(one)


def test_coorientation_flip():
    # swapping source/target while inverting sigma preserves the value
    rng = random.Random(13)
    be = TOWER3
    sig = be.frobenius_automorphism(2, 1)
    for _ in range(5):
        x = be.random_element(2, rng)
        y = be.random_element(2, rng)
        s_fwd = DecoratedSurface(be, (
            Facet("p", 0, 2, (x,), ("a",)), Facet("q", 0, 2, (y,), ("b",))
        ), (Seam("defect", ("p", "a"), ("q", "b"), sig),))
        s_rev = DecoratedSurface(be, (
            Facet("p", 0, 2, (x,), ("a",)), Facet("q", 0, 2, (y,), ("b",))
        ), (Seam("defect", ("q", "b"), ("p", "a"), sig.inverse()),))
        assert evaluate_neck(s_fwd) == evaluate_neck(s_rev)


def test_identity_defect_equals_plain():
    rng = random.Random(15)
    be = TOWER3
    ident = be.frobenius_automorphism(2, 0)
    for _ in range(5):
        x = be.random_element(2, rng)
        y = be.random_element(2, rng)
        facets = (Facet("p", 1, 2, (x,), ("a",)), Facet("q", 0, 2, (y,), ("b",)))
        s_def = DecoratedSurface(be, facets,
                                 (Seam("defect", ("p", "a"), ("q", "b"), ident),))
        s_pl = DecoratedSurface(be, facets,
                                (Seam("plain", ("p", "a"), ("q", "b")),))
        assert evaluate_neck(s_def) == evaluate_neck(s_pl)


def test_sphere_defect_two_readings():
    # eps(sigma(y) x) = eps(y sigma^-1(x)) and both equal the evaluation
    rng = random.Random(17)
    be = TOWER2
    sig = be.frobenius_automorphism(1, 1)
    for _ in range(8):
        x = be.random_element(1, rng)
        y = be.random_element(1, rng)
        s = sphere_with_defect(be, 1, sig, x, y)
        v = evaluate_neck(s)
        assert v == be.trace_to_ground(1, be.mul(1, sig(y), x))
        assert v == be.trace_to_ground(1, be.mul(1, y, sig.inverse()(x)))


def test_multiplicative_over_disjoint_union():
    rng = random.Random(19)
    for _ in range(8):
        s1 = random_surface(TOWER3, rng, max_facets=2, max_seams=3)
        s2 = random_surface(TOWER3, rng, max_facets=2, max_seams=3)
        u = disjoint_union(s1, s2)
        g = TOWER3.ground
        assert evaluate_neck(u) == g.mul(evaluate_neck(s1), evaluate_neck(s2))


def test_torus_with_sigma_is_trace_formula():
    # sum_i eps(x_i sigma(y_i)) pins the coorientation convention
    be = TOWER3
    for k in range(4):
        sig = be.frobenius_automorphism(2, k)
        t = torus_with_defect(be, 2, sig)
        pair = be.dual_bases(2)
        g = be.ground
        acc = g.zero
        for x, y in zip(pair.xs, pair.ys):
            acc = g.add(acc, be.trace_to_ground(2, be.mul(2, x, sig(y))))
        assert evaluate_neck(t) == acc


# ------------------------------------------------------------------ rewrites

@pytest.mark.parametrize("pattern", ["remove_f_disk", "remove_k_disk",
                                     "push_dot", "merge_k_boundaries"])
def test_skein_rewrites_preserve_evaluation(pattern):
    from foamlib.surfgen import random_surface_with_pattern

    rng = random.Random(hash(pattern) % 1000)
    for _ in range(12):
        s = random_surface_with_pattern(TOWER3, rng, pattern)
        assert skein_rewrite_check(pattern, s)


def test_rewrite_pattern_mismatch():
    s = plain_torus(TOWER3, 1)
    with pytest.raises(SurfaceError):
        skein_rewrite("remove_f_disk", s)


# ---------------------------------------------------------------- JSON

def test_surface_from_json_roundtrip():
    doc = {
        "backend": {"kind": "finite", "p": 3, "degrees": [1, 2, 4]},
        "facets": [
            {"id": "f1", "genus": 1, "label": "F", "dots": ["x"],
             "boundary": ["c1", "c2"]},
        ],
        "seams": [
            {"kind": "defect", "sigma": "frob^1",
             "source": ["f1", "c1"], "target": ["f1", "c2"]},
        ],
    }
    s = surface_from_json(doc)
    assert validate(s)["ok"]
    assert evaluate_neck(s) == evaluate_coloring(s)


def test_surface_json_number_field_sigma():
    doc = {
        "backend": {"kind": "numberfield", "f": "x^2-2", "roots": ["x", "-x"]},
        "facets": [{"id": "f", "genus": 0, "label": "F",
                    "boundary": ["c1", "c2"]}],
        "seams": [{"kind": "defect", "sigma": {"root": "-x"},
                   "source": ["f", "c1"], "target": ["f", "c2"]}],
    }
    s = surface_from_json(doc)
    assert evaluate_neck(s) == 0  # trace of conjugation
    assert evaluate_coloring(s) == 0


def test_foreign_automorphism_rejected():
    other = FiniteFieldTower(3, [1, 2, 4])
    sig = other.frobenius_automorphism(1, 1)
    twin = FiniteFieldTower(3, [1, 2])
    s = torus_with_defect(twin, 1, sig)
    assert not validate(s)["ok"]


def test_json_rejects_unknown_seam_kind():
    doc = {
        "backend": {"kind": "finite", "p": 2, "degrees": [1, 2]},
        "facets": [{"id": "f", "genus": 0, "label": "F", "boundary": ["c", "d"]}],
        "seams": [{"kind": "trivalent", "ends": [["f", "c"], ["f", "d"]]}],
    }
    with pytest.raises(SurfaceError):
        surface_from_json(doc)
