"""Acceptance gate: one test per headline identity, all exact."""

import os

import pytest

from stb import characters, linalg, matgrp, quadspace, tori, weyl
from stb.gf import field

CACHE = os.environ.get("STB_CACHE_DIR") or os.path.expanduser("~/.cache/stb")


def build(kind, dim, q, sign=1, **kw):
    return matgrp.build_group(kind, dim, q, sign=sign, cache_dir=CACHE, **kw)


@pytest.fixture(scope="module")
def so3():
    return build("SO", 3, 3)


@pytest.fixture(scope="module")
def so4p():
    return build("SO", 4, 3, sign=1)


@pytest.fixture(scope="module")
def so4m():
    return build("SO", 4, 3, sign=-1)


@pytest.fixture(scope="module")
def so5():
    return build("SO", 5, 3)


@pytest.fixture(scope="module")
def om4p2():
    return build("Omega", 4, 2, sign=1)


@pytest.fixture(scope="module")
def om4m2():
    return build("Omega", 4, 2, sign=-1)


@pytest.fixture(scope="module")
def om52():
    return build("Omega", 5, 2)


@pytest.fixture(scope="module")
def om52_exts(om52):
    h6p = build("Omega", 6, 2, sign=1)
    h6m = build("Omega", 6, 2, sign=-1)
    return characters.extensions_of(om52, stabilizer_groups=[h6p, h6m])


# -- 1 ----------------------------------------------------------------------

def test_criterion_01_group_orders():
    spot = {("SO", 3, 3, 1): 24, ("SO", 4, 3, 1): 576, ("SO", 4, 3, -1): 720,
            ("SO", 5, 3, 1): 51840, ("Sp", 4, 3, 1): 51840,
            ("Omega", 4, 2, -1): 60}
    for key, order in spot.items():
        assert matgrp.group_order(*key) == order
    built = 0
    for q in (2, 3, 5):
        for dim in range(1, 7):
            if q == 2 and dim == 1:
                continue
            kinds = ["O", "SO", "Omega"] + (["Sp"] if dim % 2 == 0 else [])
            for kind in kinds:
                signs = (1, -1) if (dim % 2 == 0 and kind != "Sp") else (1,)
                for sign in signs:
                    expected = matgrp.group_order(kind, dim, q, sign)
                    if expected > matgrp.DEFAULT_CAP:
                        continue
                    G = build(kind, dim, q, sign=sign)
                    assert G.order == expected, G.name
                    built += 1
                    del G
    assert built >= 70


# -- 2 ----------------------------------------------------------------------

def _conjugation_orbits(elements, gens):
    pool = set(elements)
    orbits = []
    while pool:
        w = pool.pop()
        orbit = {w}
        frontier = [w]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = weyl.mul(g, weyl.mul(x, weyl.inv(g)))
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        pool -= orbit
        orbits.append(orbit)
    return orbits


def test_criterion_02_signed_permutation_class_formulas():
    for n in range(2, 7):
        # full hyperoctahedral group: one orbit per label, centralizer formula
        elements = list(weyl.elements_B(n))
        orbits = _conjugation_orbits(elements, weyl.generators_B(n))
        table = {(lab): (size, cent)
                 for lab, _br, size, cent in weyl.conjugacy_classes("B", n)}
        assert len(orbits) == len(table)
        for orbit in orbits:
            lab = weyl.cycle_label(next(iter(orbit)))
            size, cent = table[lab]
            assert len(orbit) == size
            assert len(elements) // len(orbit) == cent
            assert cent == weyl.centralizer_order_formula(lab)

    for n in range(2, 7):
        # even-sign subgroup: split classes double up
        elements = list(weyl.elements_D(n))
        orbits = _conjugation_orbits(elements, weyl.generators_D(n))
        by_label = {}
        for orbit in orbits:
            lab = weyl.cycle_label(next(iter(orbit)))
            by_label.setdefault(lab, []).append(len(orbit))
        rows = {}
        for lab, _br, size, cent in weyl.conjugacy_classes("D", n):
            rows.setdefault(lab, []).append((size, cent))
        assert set(by_label) == set(rows)
        split_brute = set()
        for lab, sizes in by_label.items():
            want = sorted(s for s, _c in rows[lab])
            assert sorted(sizes) == want
            for size, cent in rows[lab]:
                assert cent == len(elements) // size
            if len(sizes) > 1:
                split_brute.add(lab)
                assert len(sizes) == 2 and sizes[0] == sizes[1]
        # split exactly when there is no negative part and every positive
        # cycle length is even
        predicted = {lab for lab in by_label
                     if lab[1] == () and all(x % 2 == 0 for x in lab[0])}
        assert split_brute == predicted


# -- 3 ----------------------------------------------------------------------

def test_criterion_03_double_coset_counts():
    assert weyl.cross_norm(4) == 2
    assert weyl.self_norm(4, "D") == 3
    assert weyl.cross_norm(6) == 3
    assert weyl.self_norm(6, "D") == 4


# -- 4 ----------------------------------------------------------------------

def test_criterion_04_torus_catalog_and_restriction_pattern(
        so5, so4p, so4m, om4p2, om4m2):
    for G, exts in ((so5, None), (so4p, None), (so4m, None),
                    (om4p2, None), (om4m2, None)):
        cat = tori.catalog(G)
        assert len(cat) == len(tori.labels(G.logical_dim, G.sign))
        ratio = characters.steinberg_ratio(G, exts)
        for T in cat:
            assert T.order == tori.torus_order(T.label, G.q)
            assert len(T.exponents) == T.order
            characters.check_torus_pattern(G, T, ratio)


# -- 5 ----------------------------------------------------------------------

def test_criterion_05_quotient_character_paths_and_values(so3, so4p, so4m):
    # steinberg_ratio computes every value along two routes and asserts
    # agreement internally; here the advertised values are pinned down
    for G, at_one in ((so3, 3), (so4p, 9), (so4m, 9)):
        ratio = characters.steinberg_ratio(G)
        classes = G.conj_classes()
        idx1 = next(i for i, c in enumerate(classes)
                    if c.element_order == 1)
        assert ratio[idx1] == at_one  # q^(dim V / 2 rounded down)
    for G, alpha in ((so4p, 1), (so4m, -1)):
        ratio = characters.steinberg_ratio(G)
        idx = next(i for i, c in enumerate(G.conj_classes())
                   if c.size == 1 and c.element_order == 2)
        assert ratio[idx] == alpha  # value at -Id is the type sign
    # torus values on the rank-1 group: +1 on the split torus, -1 on the
    # nonsplit one
    ratio3 = characters.steinberg_ratio(so3)
    for T in tori.catalog(so3):
        for m in T.exponents:
            if m == so3.identity():
                continue
            want = 1 if T.label.d else -1
            assert ratio3[so3.class_index_of(m)] == want


# -- 6 ----------------------------------------------------------------------

def test_criterion_06_product_law_across_splittings():
    F = field(3)
    plus2 = quadspace.standard_space(F, 2, 1)
    minus2 = quadspace.standard_space(F, 2, -1)
    dim3 = quadspace.standard_space(F, 3)
    dim3s = dim3.scale(F.nonsquare())
    plus4 = quadspace.standard_space(F, 4, 1)
    line = quadspace.line_space(F, 1)
    splits = [
        (plus2, plus2, 4),     # 4+ = (2,+) perp (2,+)
        (line, dim3, 24),      # 4  = (1) perp (3)
        (plus2, minus2, 8),    # 4- = (2,+) perp (2,-)
        (line, dim3s, 24),     # 4  = (1) perp (3, scaled)
        (line, plus4, 576),    # 5  = (1) perp (4,+)
        (plus2, dim3, 48),     # 5  = (2,+) perp (3)
        (minus2, dim3, 96),    # 5  = (2,-) perp (3)
    ]
    for s1, s2, pairs in splits:
        assert characters.check_product_rule(s1, s2, 3) == pairs


# -- 7 ----------------------------------------------------------------------

def test_criterion_07_restriction_independent_of_embedding(so3):
    F = so3.F
    nu = F.nonsquare()
    variants = []
    for tag, space in (("v", so3.space), ("vs", so3.space.scale(nu))):
        for a in (1, nu):
            ext_space, emb = matgrp.codim1_extension(space, a)
            variants.append(
                characters.Extension(f"{tag}+<{a}>", ext_space, emb))
    assert sorted(e.eps() for e in variants) == [-1, -1, 1, 1]
    tables = [characters.restricted_steinberg(so3, [e]) for e in variants]
    assert all(t == tables[0] for t in tables[1:])


# -- 8 ----------------------------------------------------------------------

def test_criterion_08_quotient_restricts_to_codim1_subgroup(
        so4p, so4m, om4p2, om4m2, om52, om52_exts):
    # odd characteristic: SO4 of either type inside SO5
    for X in (so4p, so4m):
        ext_space, emb = matgrp.codim1_extension(X.space, 1)
        G = build("SO", 5, 3, space=ext_space)
        exts_G = characters.extensions_of(G)
        exts_X = characters.extensions_of(X)
        for cl in X.conj_classes():
            s, _u = X.jordan(cl.rep)
            assert G.contains(emb(cl.rep))
            assert (characters.steinberg_ratio_at(G, exts_G, emb(s))
                    == characters.steinberg_ratio_at(X, exts_X, s))
    # characteristic 2: Omega4 of either type inside the symplectic model,
    # which shares the underlying 4x4 matrices
    exts52 = om52_exts
    for X in (om4p2, om4m2):
        exts_X = characters.extensions_of(X)
        for cl in X.conj_classes():
            s, _u = X.jordan(cl.rep)
            assert om52.contains(cl.rep)
            assert (characters.steinberg_ratio_at(om52, exts52, s)
                    == characters.steinberg_ratio_at(X, exts_X, s))


# -- 9 ----------------------------------------------------------------------

def test_criterion_09_gl_and_unitary_fixed_vector_laws():
    assert characters.check_gl_embedding(2, 3) > 0
    assert characters.check_unitary_embedding(2, 3) > 0


# -- 10 ---------------------------------------------------------------------

def test_criterion_10_census_matches_bruteforce_norm(
        so3, so4p, so4m, so5, om4p2, om4m2, om52, om52_exts):
    want = {so3: 4, so4p: 14, so4m: 12, so5: 13, om4p2: 8, om4m2: 6}
    for G, total in want.items():
        dual = characters.dual_group(G, cache_dir=CACHE)
        reports, predicted, brute = characters.census(G, dual=dual)
        assert predicted == brute == total, G.name
        for r in reports:
            if r.defect == 1:
                assert r.predicted_norm == 0
    stp = characters.restricted_steinberg(om52, om52_exts)
    reports, predicted, brute = characters.census(om52, stp=stp, dual=om52)
    assert predicted == brute == 7
    for r in reports:
        if r.defect == 1:
            assert r.predicted_norm == 0


@pytest.mark.skipif(not os.environ.get("STB_STRETCH"),
                    reason="set STB_STRETCH=1 to run the dim-6 censuses")
def test_criterion_10_stretch_dim6_census():
    for sign, total in ((1, 41), (-1, 39)):
        G = build("SO", 6, 3, sign=sign)
        reports, predicted, brute = characters.census(G)
        assert predicted == brute == total, G.name
        del G


# -- 11 ---------------------------------------------------------------------

def test_criterion_11_inner_product_quadruples(so3, so4p, so4m, so5):
    quads = {
        so3: (1, 1, 1, 0),
        so4p: (2, 1, 0, 0),
        so4m: (0, 1, 0, 0),
        so5: (1, 1, 0, 0),
    }
    for G, want in quads.items():
        got = characters.quadruple_of_inner_products(G)
        assert got == want, G.name
    # the two even types differ exactly by 1 + type sign in the first slot
    assert characters.quadruple_of_inner_products(so4p)[0] == 2
    assert characters.quadruple_of_inner_products(so4m)[0] == 0
    # the trivial character appears only in the smallest odd case
    assert characters.quadruple_of_inner_products(so3)[2] != 0
    assert characters.quadruple_of_inner_products(so5)[2] == 0


# -- 12 ---------------------------------------------------------------------

def test_criterion_12_structural_spot_checks(so4p, so5):
    # two orbits of maximal totally singular planes on the split 4-space
    F = so4p.F
    planes = so4p.space.totally_singular_planes()
    assert len(planes) == 8

    def canon(rows):
        R, _p = linalg.rref(F, rows)
        return tuple(R)

    pool = {canon(p) for p in planes}
    assert len(pool) == 8
    gens = so4p.gens()
    orbits = []
    while pool:
        start = pool.pop()
        orbit = {start}
        frontier = [start]
        while frontier:
            rows = frontier.pop()
            for g in gens:
                img = canon(tuple(linalg.mat_vec(F, g, v) for v in rows))
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        pool -= orbit
        orbits.append(orbit)
    assert sorted(len(o) for o in orbits) == [4, 4]

    # every maximal torus of SO5(3) sees spinor norm -1 and fixes a line
    for T in tori.catalog(so5):
        assert any(so5.spinor_norm(m) == -1 for m in T.exponents)
        rows = []
        for g in T.gens:
            for i in range(5):
                rows.append(tuple(F.sub(g[i][j], 1 if i == j else 0)
                                  for j in range(5)))
        fixed = linalg.kernel_basis(F, tuple(rows))
        assert len(fixed) == 1
