import itertools
import os

import pytest

from stb import linalg, matgrp, quadspace
from stb.gf import field


KNOWN_ORDERS = [
    ("SO", 3, 3, 1, 24),
    ("SO", 4, 3, 1, 576),
    ("SO", 4, 3, -1, 720),
    ("SO", 5, 3, 1, 51840),
    ("Sp", 2, 3, 1, 24),
    ("Sp", 4, 3, 1, 51840),
    ("Omega", 4, 2, 1, 36),
    ("Omega", 4, 2, -1, 60),
    ("Omega", 5, 2, 1, 720),
    ("Sp", 4, 2, 1, 720),
    ("O", 3, 3, 1, 48),
    ("Omega", 3, 3, 1, 12),
    ("Omega", 4, 3, 1, 288),
    ("Omega", 4, 3, -1, 360),
]


@pytest.mark.parametrize("kind,dim,q,sign,order", KNOWN_ORDERS)
def test_known_orders(kind, dim, q, sign, order):
    assert matgrp.group_order(kind, dim, q, sign) == order
    G = matgrp.build_group(kind, dim, q, sign=sign)
    assert G.order == order


def test_closure_equals_brute_force():
    sp = quadspace.standard_space(field(3), 4, -1)
    brute = matgrp.brute_isometries(sp)
    so = [g for g in brute if linalg.det(field(3), g) == 1]
    G = matgrp.build_group("SO", 4, 3, sign=-1)
    assert G.order == len(so)
    for g in so:
        assert G.contains(g)


@pytest.fixture(scope="module")
def so3():
    return matgrp.build_group("SO", 3, 3)


@pytest.fixture(scope="module")
def so4m():
    return matgrp.build_group("SO", 4, 3, sign=-1)


def test_conj_classes_partition(so4m):
    classes = so4m.conj_classes()
    assert sum(c.size for c in classes) == so4m.order
    for c in classes:
        assert c.size * c.centralizer_order == so4m.order
        assert so4m.element_order(c.rep) == c.element_order
        s, u = so4m.jordan(c.rep)
        assert c.is_semisimple == (u == so4m.identity())


def test_class_map_consistency(so3):
    for i, c in enumerate(so3.conj_classes()):
        assert so3.class_index_of(c.rep) == i
    inv = so3.inverse_class_table()
    classes = so3.conj_classes()
    for i, j in enumerate(inv):
        rep = classes[i].rep
        assert so3.class_index_of(so3.mat_inv(rep)) == j


def test_jordan_decomposition(so4m):
    F = so4m.F
    for c in so4m.conj_classes():
        s, u = so4m.jordan(c.rep)
        assert linalg.mat_mul(F, s, u) == c.rep
        assert linalg.mat_mul(F, s, u) == linalg.mat_mul(F, u, s)
        assert so4m.is_semisimple(s)
        ou = so4m.element_order(u)
        while ou % so4m.p == 0:
            ou //= so4m.p
        assert ou == 1  # unipotent part has p-power order


def test_inner_product_two_routes(so3, so4m):
    """Plain classwise sum vs the inverse-class pairing; for the integer
    class functions used everywhere here the two must agree."""
    for G in (so3, so4m, matgrp.build_group("Sp", 4, 2)):
        classes = G.conj_classes()
        fs = [
            [1] * len(classes),
            [c.element_order for c in classes],
            [c.size % 7 - 3 for c in classes],
        ]
        for f1 in fs:
            for f2 in fs:
                a = G.inner_product(f1, f2)
                b = G.inner_product(f1, f2, hermitian=True)
                assert a == b


def test_centralizer_order_of(so3):
    for c in so3.conj_classes():
        assert so3.centralizer_order_of(c.rep) == c.centralizer_order


def test_spinor_norm_kernel_is_index_two(so3):
    vals = {}
    total_plus = 0
    for c in so3.conj_classes():
        v = so3.spinor_norm(c.rep)
        assert v in (1, -1)
        vals[c.rep] = v
        if v == 1:
            total_plus += c.size
    assert total_plus == so3.order // 2
    # multiplicativity on a sample
    els = list(itertools.islice(so3.elements(), 16))
    for a in els[:8]:
        for b in els[8:]:
            ab = so3.mat_mul(a, b)
            assert so3.spinor_norm(ab) == \
                so3.spinor_norm(a) * so3.spinor_norm(b)


def test_dickson_invariant():
    G = matgrp.build_group("O", 4, 2, sign=-1)
    plus = sum(c.size for c in G.conj_classes() if G.dickson(c.rep) == 0)
    assert plus == G.order // 2
    els = list(itertools.islice(G.elements(), 14))
    for a in els[:7]:
        for b in els[7:]:
            ab = G.mat_mul(a, b)
            assert G.dickson(ab) == (G.dickson(a) + G.dickson(b)) % 2
    Om = matgrp.build_group("Omega", 4, 2, sign=-1)
    for c in Om.conj_classes():
        assert Om.dickson(c.rep) == 0


def test_fixed_space_basis(so4m):
    F = so4m.F
    for c in so4m.conj_classes():
        basis = so4m.fixed_space_basis(c.rep)
        for v in basis:
            assert linalg.mat_vec(F, c.rep, v) == v


def test_codim1_extension(so3):
    sp, emb = matgrp.codim1_extension(so3.space, 1)
    assert sp.dim == 4
    for c in so3.conj_classes():
        h = emb(c.rep)
        assert sp.is_isometry(h)
        assert linalg.det(so3.F, h) == 1


def test_symplectic_point_stabilizer():
    H = matgrp.build_group("Omega", 4, 2, sign=-1)
    v, iso = matgrp.symplectic_point_stabilizer(H, 2)
    assert H.space.Q(v) != 0
    assert len(iso) == matgrp.group_order("Sp", 2, 2)
    for sp_mat, h_mat in iso.items():
        assert H.contains(h_mat)


def test_group_cache_roundtrip(tmp_path):
    cache = str(tmp_path)
    G1 = matgrp.build_group("SO", 4, 3, sign=1, cache_dir=cache)
    files = os.listdir(cache)
    assert any(f.endswith(".stbgrp") for f in files)
    G2 = matgrp.build_group("SO", 4, 3, sign=1, cache_dir=cache)
    assert sorted(G2.codes_list()) == sorted(G1.codes_list())


def test_class_cache_roundtrip(tmp_path):
    cache = str(tmp_path)
    G1 = matgrp.build_group("SO", 4, 3, sign=1, cache_dir=cache)
    c1 = [(c.code, c.size, c.element_order, c.is_semisimple,
           c.centralizer_order) for c in G1.conj_classes()]
    assert any(f.endswith(".stbcls") for f in os.listdir(cache))
    G2 = matgrp.build_group("SO", 4, 3, sign=1, cache_dir=cache)
    c2 = [(c.code, c.size, c.element_order, c.is_semisimple,
           c.centralizer_order) for c in G2.conj_classes()]
    assert c1 == c2


def test_cap_refused():
    with pytest.raises(RuntimeError):
        matgrp.build_group("SO", 6, 3, sign=1, cap=1000)


def test_embed_gl():
    space, embed, gl = matgrp.embed_gl(2, 3)
    assert len(gl) == 48  # |GL2(3)|
    G = matgrp.build_group("SO", 4, 3, sign=1, space=space)
    for g in gl[:10]:
        assert G.contains(embed(g))


def test_embed_unitary():
    space, embed, un, F2 = matgrp.embed_unitary(2, 3)
    assert len(un) == 96  # |U2(3)| = (q^2-1) q (q+1)
    G = matgrp.build_group("SO", 4, 3, sign=-1, space=space)
    for g in un[:10]:
        assert G.contains(embed(g))
