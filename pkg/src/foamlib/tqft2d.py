"""Decorated and patched closed surfaces, with two exact evaluators.

A surface is given pre-cut: facets are connected surfaces with genus,
an algebra label (a backend level), floating dots (algebra elements) and
named boundary circles; seams glue boundary circles in pairs.  A seam may
join two circles of the same facet (a non-separating curve on a facet of
reduced genus).  Three seam kinds:

  plain      -- same label on both sides, an ordinary tube
  inclusion  -- lower tower level on one side, higher on the other
  defect     -- same label on both sides, crossed by an automorphism;
               the stored source/target endpoints fix the coorientation

evaluate_neck contracts every seam with a dual-basis insertion and
evaluates each closed-up facet through its trace:

  plain                sum_i  x_i | y_i
  defect sigma         sum_i  sigma(y_i) at the source | x_i at the target
  inclusion F < K      sum_i  x_i at the F side | incl(y_i) at the K side
                       (dual bases of F with respect to its trace)

and a facet of genus g whose dots multiply to a contributes
trace(h^g * a), h the handle element of its level.  The defect convention
is pinned by requiring the torus with one sigma-circle to evaluate to
sum_i eps(x_i sigma(y_i)), the trace of sigma.

evaluate_coloring is the independent spectral route for separable tower
backends: a coloring assigns to each facet an embedding of its level into
the splitting level; plain seams force equal colorings, a defect seam
forces color(target) = color(source) composed with sigma, and an
inclusion seam forces the upper coloring to restrict to the lower one.
Each coloring contributes the product over facets of the embedded dot
products (field levels have handle element 1, so genus drops out).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, replace
from .fieldext import (
    Automorphism,
    FiniteFieldTower,
    FrobeniusBackend,
    RationalNumberField,
    make_backend,
)


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class Facet:
    id: str
    genus: int
    level: int
    dots: tuple = ()
    boundary: tuple[str, ...] = ()


@dataclass(frozen=True)
class Seam:
    """kind in {plain, inclusion, defect}.

    For inclusion, end0 is the lower-level side and end1 the upper; for
    defect, end0 is the source of the coorientation and end1 the target.
    """

    kind: str
    end0: tuple[str, str]
    end1: tuple[str, str]
    sigma: Automorphism | None = None


@dataclass(frozen=True)
class DecoratedSurface:
    backend: FrobeniusBackend
    facets: tuple[Facet, ...]
    seams: tuple[Seam, ...]

    def facet(self, fid: str) -> Facet:
        for f in self.facets:
            if f.id == fid:
                return f
        raise SurfaceError(f"no facet {fid!r}")


# ---------------------------------------------------------------------------
# Validation


def validate(s: DecoratedSurface) -> dict:
    errors = []
    seen_circles = {}
    ids = set()
    for f in s.facets:
        if f.id in ids:
            errors.append(f"duplicate facet id {f.id!r}")
        ids.add(f.id)
        if f.genus < 0:
            errors.append(f"facet {f.id}: negative genus")
        for c in f.boundary:
            key = (f.id, c)
            if key in seen_circles:
                errors.append(f"facet {f.id}: duplicate circle {c!r}")
            seen_circles[key] = 0

    for seam in s.seams:
        for end in (seam.end0, seam.end1):
            if end not in seen_circles:
                errors.append(f"seam endpoint {end} references no boundary circle")
            else:
                seen_circles[end] += 1
        if seam.end0 == seam.end1:
            errors.append(f"seam glues a circle {seam.end0} to itself")
        try:
            lv0 = s.facet(seam.end0[0]).level
            lv1 = s.facet(seam.end1[0]).level
        except SurfaceError as exc:
            errors.append(str(exc))
            continue
        if seam.kind == "plain":
            if lv0 != lv1:
                errors.append(f"plain seam joins different labels {lv0} != {lv1}")
        elif seam.kind == "defect":
            if lv0 != lv1:
                errors.append(f"defect seam joins different labels {lv0} != {lv1}")
            if seam.sigma is None or seam.sigma.level != lv0:
                errors.append("defect seam needs an automorphism of its own level")
            elif seam.sigma.backend is not s.backend:
                errors.append("defect automorphism belongs to a different backend")
        elif seam.kind == "inclusion":
            if not lv0 < lv1:
                errors.append(
                    f"inclusion seam needs lower level on end0: got {lv0} !< {lv1}"
                )
        else:
            errors.append(f"unknown seam kind {seam.kind!r}")

    for (fid, c), count in seen_circles.items():
        if count != 1:
            errors.append(
                f"boundary circle {c!r} of facet {fid} lies on {count} seams (want 1)"
            )

    # connected components and Euler characteristics
    parent = {f.id: f.id for f in s.facets}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for seam in s.seams:
        a, b = seam.end0[0], seam.end1[0]
        if a in parent and b in parent:
            parent[find(a)] = find(b)
    comps: dict[str, int] = {}
    for f in s.facets:
        root = find(f.id)
        comps[root] = comps.get(root, 0) + (2 - 2 * f.genus - len(f.boundary))
    for root, chi in sorted(comps.items()):
        if chi % 2 != 0:
            errors.append(f"component {root}: odd Euler characteristic {chi}")

    return {
        "ok": not errors,
        "errors": errors,
        "euler_characteristics": [chi for _, chi in sorted(comps.items())],
    }


def require_valid(s: DecoratedSurface) -> None:
    report = validate(s)
    if not report["ok"]:
        raise SurfaceError("; ".join(report["errors"]))


# ---------------------------------------------------------------------------
# Neck-cutting evaluator


def evaluate_neck(s: DecoratedSurface, dual_pairs=None):
    """State sum over seam multi-indices; returns a ground-field element.

    dual_pairs optionally overrides the dual pair used per level
    ({level: DualBasisPair}) so basis-independence can be tested; the
    override applies to seam insertions (handle elements are dual-pair
    independent regardless).
    """
    require_valid(s)
    be = s.backend
    ground = be.ground

    if dual_pairs is not None:
        be = _with_dual_override(be, dual_pairs)

    ins0, ins1 = {}, {}
    for i, seam in enumerate(s.seams):
        a, b = _seam_insertions_cached(s, seam, be)
        ins0[i] = a
        ins1[i] = b

    # circle -> (seam index, side)
    circle_seam: dict[tuple[str, str], tuple[int, int]] = {}
    for i, seam in enumerate(s.seams):
        circle_seam[seam.end0] = (i, 0)
        circle_seam[seam.end1] = (i, 1)

    # per-facet value tables over local index tuples
    facet_tables = []
    facet_seamlists = []
    for f in s.facets:
        base = be.one(f.level)
        for d in f.dots:
            base = be.mul(f.level, base, d)
        if f.genus:
            h = be.handle_element(f.level)
            for _ in range(f.genus):
                base = be.mul(f.level, base, h)
        local = [circle_seam[(f.id, c)] for c in f.boundary]
        ranges = [range(len(ins0[i])) for i, _ in local]
        table = {}
        for combo in itertools.product(*ranges):
            acc = base
            for (seam_i, side), idx in zip(local, combo):
                item = (ins0 if side == 0 else ins1)[seam_i][idx]
                acc = be.mul(f.level, acc, item)
            table[combo] = be.trace_to_ground(f.level, acc)
        facet_tables.append(table)
        facet_seamlists.append([i for i, _ in local])

    total = ground.zero
    seam_dims = [len(ins0[i]) for i in range(len(s.seams))]
    for assignment in itertools.product(*[range(d) for d in seam_dims]):
        prod = ground.one
        zero = False
        for table, seams_here in zip(facet_tables, facet_seamlists):
            key = tuple(assignment[i] for i in seams_here)
            v = table[key]
            if ground.is_zero(v):
                zero = True
                break
            prod = ground.mul(prod, v)
        if not zero:
            total = ground.add(total, prod)
    return total


class _with_dual_override:
    """Proxy that substitutes fixed dual pairs for chosen levels."""

    def __init__(self, backend, pairs):
        self._backend = backend
        self._pairs = pairs

    def dual_bases(self, level):
        level = self._backend.level_index(level)
        if level in self._pairs:
            return self._pairs[level]
        return self._backend.dual_bases(level)

    def __getattr__(self, name):
        return getattr(self._backend, name)


def _seam_insertions_cached(s, seam, be):
    if seam.kind == "plain":
        level = s.facet(seam.end0[0]).level
        pair = be.dual_bases(level)
        return list(pair.xs), list(pair.ys)
    if seam.kind == "defect":
        level = s.facet(seam.end0[0]).level
        pair = be.dual_bases(level)
        return [seam.sigma(y) for y in pair.ys], list(pair.xs)
    if seam.kind == "inclusion":
        lo = s.facet(seam.end0[0]).level
        hi = s.facet(seam.end1[0]).level
        pair = be.dual_bases(lo)
        return list(pair.xs), [be.include(y, lo, hi) for y in pair.ys]
    raise SurfaceError(f"unknown seam kind {seam.kind!r}")


# ---------------------------------------------------------------------------
# Coloring evaluator


def evaluate_coloring(s: DecoratedSurface):
    """Sum over root colorings; separable tower/number-field backends only."""
    require_valid(s)
    be = s.backend
    if not isinstance(be, (FiniteFieldTower, RationalNumberField)):
        raise SurfaceError(
            "coloring evaluation needs a separable field backend "
            f"(got {be.kind})"
        )

    if isinstance(be, FiniteFieldTower):
        omega = be.fields[be.top]
        ground_of = lambda v: _tower_pull_to_ground(be, v)  # noqa: E731
    else:
        omega = be.field
        ground_of = lambda v: _nf_pull_to_ground(be, v)  # noqa: E731

    levels = sorted({f.level for f in s.facets})
    embeddings = {lv: be.embeddings(lv) for lv in levels}

    # constraint tables
    defect_tables = {}
    incl_tables = {}
    for i, seam in enumerate(s.seams):
        if seam.kind == "defect":
            defect_tables[i] = be.automorphism_embedding_action(seam.sigma)
        elif seam.kind == "inclusion":
            lo = s.facet(seam.end0[0]).level
            hi = s.facet(seam.end1[0]).level
            if be.dim(lo) == 1:
                incl_tables[i] = [0] * len(embeddings[hi])
                continue
            lo_roots = be.embedding_roots(lo)
            glo = _level_generator(be, lo)
            table = []
            for phi in embeddings[hi]:
                img = phi(be.include(glo, lo, hi))
                table.append(lo_roots.index(img))
            incl_tables[i] = table

    # dot products per facet, embedded lazily
    facet_ids = [f.id for f in s.facets]
    index_of = {fid: i for i, fid in enumerate(facet_ids)}
    dot_products = []
    for f in s.facets:
        prod = be.one(f.level)
        for d in f.dots:
            prod = be.mul(f.level, prod, d)
        dot_products.append(prod)

    constraints = []  # (facet_a, facet_b, checker(ca, cb) -> bool)
    for i, seam in enumerate(s.seams):
        fa, fb = index_of[seam.end0[0]], index_of[seam.end1[0]]
        if seam.kind == "plain":
            constraints.append((fa, fb, lambda ca, cb: ca == cb))
        elif seam.kind == "defect":
            table = defect_tables[i]
            constraints.append(
                (fa, fb, lambda ca, cb, t=table: cb == t[ca])
            )
        else:
            table = incl_tables[i]
            constraints.append(
                (fa, fb, lambda ca, cb, t=table: t[cb] == ca)
            )

    by_pair: dict[tuple[int, int], list] = {}
    for fa, fb, chk in constraints:
        by_pair.setdefault((fa, fb), []).append(chk)

    dims = [be.dim(f.level) for f in s.facets]
    total = omega.zero
    assignment = [0] * len(s.facets)

    def recurse(pos, partial):
        nonlocal total
        if pos == len(s.facets):
            total = omega.add(total, partial)
            return
        f = s.facets[pos]
        for c in range(dims[pos]):
            assignment[pos] = c
            ok = True
            for (fa, fb), chks in by_pair.items():
                if max(fa, fb) != pos:
                    continue
                for chk in chks:
                    if not chk(assignment[fa], assignment[fb]):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            phi = embeddings[f.level][c]
            weight = phi(dot_products[pos])
            recurse(pos + 1, omega.mul(partial, weight))

    recurse(0, omega.one)
    return ground_of(total)


def _level_generator(be, level):
    if isinstance(be, FiniteFieldTower):
        return be.fields[level].gen()
    if level == 0:
        return be.one(0)
    return be.field.gen()


def _tower_pull_to_ground(be: FiniteFieldTower, v):
    try:
        return be._pull_back(v, be.top, 0)
    except ValueError:
        raise SurfaceError(
            "coloring evaluation produced a value outside the ground field"
        ) from None


def _nf_pull_to_ground(be: RationalNumberField, v):
    if any(c != 0 for c in v[1:]):
        raise SurfaceError(
            "coloring evaluation produced a value outside the ground field"
        )
    return v[0]


# ---------------------------------------------------------------------------
# Skein rewrites


REWRITE_RELATIONS = (
    "remove_f_disk",
    "remove_k_disk",
    "push_dot",
    "merge_k_boundaries",
)


def skein_rewrite(relation: str, s: DecoratedSurface) -> DecoratedSurface:
    """Apply one local rewrite; raises SurfaceError if the pattern is absent."""
    if relation == "remove_f_disk":
        return _remove_disk(s, lower_side=True)
    if relation == "remove_k_disk":
        return _remove_disk(s, lower_side=False)
    if relation == "push_dot":
        return _push_dot(s)
    if relation == "merge_k_boundaries":
        return _merge_k_boundaries(s)
    raise SurfaceError(f"unknown relation {relation!r}; have {REWRITE_RELATIONS}")


def skein_rewrite_check(relation: str, s: DecoratedSurface) -> bool:
    """Rewrite and compare evaluate_neck on both sides."""
    t = skein_rewrite(relation, s)
    return evaluate_neck(s) == evaluate_neck(t)


def _find_inclusion_disk(s: DecoratedSurface, lower_side: bool):
    for i, seam in enumerate(s.seams):
        if seam.kind != "inclusion":
            continue
        end = seam.end0 if lower_side else seam.end1
        other = seam.end1 if lower_side else seam.end0
        f = s.facet(end[0])
        if f.genus == 0 and not f.dots and len(f.boundary) == 1 and end[0] != other[0]:
            return i, seam, f, other
    raise SurfaceError("no matching disk pattern for rewrite")


def _remove_disk(s: DecoratedSurface, lower_side: bool) -> DecoratedSurface:
    """Remove a dotless disk capping an inclusion seam.

    A dotless lower-level disk disappears without a trace; a dotless
    upper-level disk leaves the relative trace of 1 as a dot on the lower
    facet (the [K:F]-multiplication rule).
    """
    i, seam, disk, other = _find_inclusion_disk(s, lower_side)
    be = s.backend
    keep_facets = []
    for f in s.facets:
        if f.id == disk.id:
            continue
        if f.id == other[0]:
            boundary = tuple(c for c in f.boundary if (f.id, c) != other)
            dots = f.dots
            if not lower_side:
                lo = s.facet(seam.end0[0]).level
                hi = s.facet(seam.end1[0]).level
                dots = dots + (be.relative_trace(be.one(hi), hi, lo),)
            keep_facets.append(replace(f, boundary=boundary, dots=dots))
        else:
            keep_facets.append(f)
    seams = tuple(se for j, se in enumerate(s.seams) if j != i)
    return DecoratedSurface(be, tuple(keep_facets), seams)


def _push_dot(s: DecoratedSurface) -> DecoratedSurface:
    """Move one dot from the lower side of an inclusion seam to the upper."""
    be = s.backend
    for seam in s.seams:
        if seam.kind != "inclusion":
            continue
        flo = s.facet(seam.end0[0])
        fhi = s.facet(seam.end1[0])
        if flo.id == fhi.id or not flo.dots:
            continue
        a, rest = flo.dots[0], flo.dots[1:]
        moved = be.include(a, flo.level, fhi.level)
        out = []
        for f in s.facets:
            if f.id == flo.id:
                out.append(replace(f, dots=rest))
            elif f.id == fhi.id:
                out.append(replace(f, dots=f.dots + (moved,)))
            else:
                out.append(f)
        return DecoratedSurface(be, tuple(out), s.seams)
    raise SurfaceError("no dotted lower facet on an inclusion seam")


def _merge_k_boundaries(s: DecoratedSurface) -> DecoratedSurface:
    """Merge two boundary circles of one upper-level facet into one.

    If the two inclusion seams lead to the same lower facet, that facet
    gains a handle; if they lead to two different lower facets, the facets
    merge (genus adds).  The second seam disappears.
    """
    be = s.backend
    for i, s1 in enumerate(s.seams):
        if s1.kind != "inclusion":
            continue
        for j in range(i + 1, len(s.seams)):
            s2 = s.seams[j]
            if s2.kind != "inclusion":
                continue
            if s1.end1[0] != s2.end1[0]:
                continue
            kfac = s.facet(s1.end1[0])
            f1 = s.facet(s1.end0[0])
            f2 = s.facet(s2.end0[0])
            if kfac.id in (f1.id, f2.id):
                continue
            if f1.id == f2.id:
                out = []
                for f in s.facets:
                    if f.id == kfac.id:
                        out.append(replace(
                            f, boundary=tuple(c for c in f.boundary
                                              if (f.id, c) != s2.end1)))
                    elif f.id == f1.id:
                        out.append(replace(
                            f, genus=f.genus + 1,
                            boundary=tuple(c for c in f.boundary
                                           if (f.id, c) != s2.end0)))
                    else:
                        out.append(f)
                new_seams = tuple(se for t, se in enumerate(s.seams) if t != j)
                return DecoratedSurface(be, tuple(out), new_seams)
            # merge f2 into f1; circles of f2 get re-homed under f1's id
            rename = {}
            new_boundary = list(f1.boundary)
            for c in f2.boundary:
                if (f2.id, c) == s2.end0:
                    continue
                newc = c
                while newc in new_boundary:
                    newc += "_m"
                rename[(f2.id, c)] = (f1.id, newc)
                new_boundary.append(newc)
            merged = replace(
                f1,
                genus=f1.genus + f2.genus,
                dots=f1.dots + f2.dots,
                boundary=tuple(new_boundary),
            )
            out = []
            for f in s.facets:
                if f.id == kfac.id:
                    out.append(replace(
                        f, boundary=tuple(c for c in f.boundary
                                          if (f.id, c) != s2.end1)))
                elif f.id == f1.id:
                    out.append(merged)
                elif f.id == f2.id:
                    continue
                else:
                    out.append(f)
            new_seams = []
            for t, se in enumerate(s.seams):
                if t == j:
                    continue
                e0 = rename.get(se.end0, se.end0)
                e1 = rename.get(se.end1, se.end1)
                new_seams.append(replace(se, end0=e0, end1=e1))
            return DecoratedSurface(be, tuple(out), tuple(new_seams))
    raise SurfaceError("no upper facet with two inclusion circles")


# ---------------------------------------------------------------------------
# Builders


def surface(backend, facets, seams) -> DecoratedSurface:
    return DecoratedSurface(backend, tuple(facets), tuple(seams))


def torus_with_defect(backend, level, sigma: Automorphism) -> DecoratedSurface:
    """Torus cut along one non-separating sigma-circle."""
    level = backend.level_index(level)
    f = Facet("f", 0, level, (), ("c1", "c2"))
    seam = Seam("defect", ("f", "c1"), ("f", "c2"), sigma)
    return DecoratedSurface(backend, (f,), (seam,))


def plain_torus(backend, level, dots=()) -> DecoratedSurface:
    level = backend.level_index(level)
    f = Facet("f", 1, level, tuple(dots), ())
    return DecoratedSurface(backend, (f,), ())


def seamed_sphere(backend, low_level, high_level, a=None, b=None) -> DecoratedSurface:
    """S^2(a, b): lower-level disk with dot a, upper-level disk with dot b."""
    lo = backend.level_index(low_level)
    hi = backend.level_index(high_level)
    da = (a,) if a is not None else ()
    db = (b,) if b is not None else ()
    f1 = Facet("lo", 0, lo, da, ("c",))
    f2 = Facet("hi", 0, hi, db, ("c",))
    seam = Seam("inclusion", ("lo", "c"), ("hi", "c"))
    return DecoratedSurface(backend, (f1, f2), (seam,))


def sphere_with_defect(backend, level, sigma, a=None, b=None) -> DecoratedSurface:
    """Sphere with one sigma-circle; dot a in the source disk, b in the target."""
    level = backend.level_index(level)
    da = (a,) if a is not None else ()
    db = (b,) if b is not None else ()
    f1 = Facet("src", 0, level, da, ("c",))
    f2 = Facet("tgt", 0, level, db, ("c",))
    seam = Seam("defect", ("src", "c"), ("tgt", "c"), sigma)
    return DecoratedSurface(backend, (f1, f2), (seam,))


def genus2_three_defects(backend, level, s1, s2, s3) -> DecoratedSurface:
    """Two three-holed spheres joined by three defect tubes (genus 2)."""
    level = backend.level_index(level)
    f1 = Facet("p1", 0, level, (), ("a1", "a2", "a3"))
    f2 = Facet("p2", 0, level, (), ("b1", "b2", "b3"))
    seams = (
        Seam("defect", ("p1", "a1"), ("p2", "b1"), s1),
        Seam("defect", ("p1", "a2"), ("p2", "b2"), s2),
        Seam("defect", ("p1", "a3"), ("p2", "b3"), s3),
    )
    return DecoratedSurface(backend, (f1, f2), seams)


def disjoint_union(s1: DecoratedSurface, s2: DecoratedSurface) -> DecoratedSurface:
    if s1.backend is not s2.backend:
        raise SurfaceError("disjoint union needs a shared backend")
    facets = list(s1.facets)
    seams = list(s1.seams)
    taken = {f.id for f in facets}
    rename = {}
    for f in s2.facets:
        nid = f.id
        while nid in taken:
            nid += "_b"
        taken.add(nid)
        rename[f.id] = nid
        facets.append(replace(f, id=nid))
    for se in s2.seams:
        seams.append(replace(
            se,
            end0=(rename[se.end0[0]], se.end0[1]),
            end1=(rename[se.end1[0]], se.end1[1]),
        ))
    return DecoratedSurface(s1.backend, tuple(facets), tuple(seams))


# ---------------------------------------------------------------------------
# JSON interface


def parse_sigma(backend, spec) -> Automorphism:
    """Automorphism from its JSON form: "frob^k", "id", {"root": "-x"},
    {"matrix": [[...]]} -- kind-dependent."""
    if isinstance(spec, str):
        if spec == "id":
            return backend.identity_automorphism(getattr(backend, "top", 0))
        if spec.startswith("frob^"):
            if not isinstance(backend, FiniteFieldTower):
                raise SurfaceError("frob^k needs a finite tower backend")
            return ("frob", int(spec[5:]))
        raise SurfaceError(f"cannot parse automorphism {spec!r}")
    if isinstance(spec, dict):
        if "root" in spec:
            from .exactalg.multipoly import parse_unipoly
            from .exactalg.scalars import QQ_DOMAIN

            root_poly = parse_unipoly(spec["root"], QQ_DOMAIN)
            img = backend._elem_from_poly(root_poly)
            return backend.automorphism_by_root(backend.roots.index(img))
        if "matrix" in spec:
            return backend.matrix_automorphism(spec["matrix"])
    raise SurfaceError(f"cannot parse automorphism {spec!r}")


def surface_from_json(doc, backend: FrobeniusBackend | None = None) -> DecoratedSurface:
    """Build a surface from the JSON schema.

    {"backend": {...}?, "facets": [{"id", "genus", "label", "dots", "boundary"}],
     "seams": [{"kind": "plain", "ends": [[f,c],[f,c]]}
              | {"kind": "inclusion", "lower": [f,c], "upper": [f,c]}
              | {"kind": "defect", "sigma": ..., "source": [f,c], "target": [f,c]}]}
    """
    if isinstance(doc, str):
        doc = json.loads(doc)
    if backend is None:
        if "backend" not in doc:
            raise SurfaceError("no backend given (inline or as argument)")
        backend = make_backend(doc["backend"])
    facets = []
    for fd in doc["facets"]:
        level = backend.level_index(fd.get("label", fd.get("level", 0)))
        dots = tuple(
            backend.parse_element(level, d) for d in fd.get("dots", ())
        )
        facets.append(Facet(fd["id"], fd.get("genus", 0), level, dots,
                            tuple(fd.get("boundary", ()))))
    seams = []
    for sd in doc["seams"]:
        kind = sd["kind"]
        if kind == "plain":
            (f0, c0), (f1, c1) = sd["ends"]
            seams.append(Seam("plain", (f0, c0), (f1, c1)))
        elif kind == "inclusion":
            seams.append(Seam("inclusion", tuple(sd["lower"]), tuple(sd["upper"])))
        elif kind == "defect":
            sig = parse_sigma(backend, sd["sigma"])
            if isinstance(sig, tuple) and sig[0] == "frob":
                level = None
                for fd in doc["facets"]:
                    if fd["id"] == sd["source"][0]:
                        level = backend.level_index(fd.get("label", fd.get("level", 0)))
                sig = backend.frobenius_automorphism(level, sig[1])
            seams.append(Seam("defect", tuple(sd["source"]), tuple(sd["target"]), sig))
        else:
            raise SurfaceError(
                f"unknown seam kind {kind!r}; trivalent network vertices and "
                "other singularities are outside this model"
            )
    out = DecoratedSurface(backend, tuple(facets), tuple(seams))
    require_valid(out)
    return out
