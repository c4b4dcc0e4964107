import pytest

from stb import linalg, matgrp, tori


@pytest.fixture(scope="module")
def so5():
    return matgrp.build_group("SO", 5, 3)


@pytest.fixture(scope="module")
def so4p():
    return matgrp.build_group("SO", 4, 3, sign=1)


def test_label_enumeration():
    # odd dim: all signed partitions of the half-rank
    assert len(tori.labels(3, 1)) == 2
    assert len(tori.labels(5, 1)) == 5
    # even dim: parity of the e-part count matches the type, and the
    # all-even-d labels appear twice (twin classes)
    plus4 = tori.labels(4, 1)
    minus4 = tori.labels(4, -1)
    assert len(plus4) == 4 and len(minus4) == 2
    assert sum(1 for lab in plus4 if lab.branch) == 2
    for lab in plus4:
        assert (-1) ** len(lab.e) == 1
    for lab in minus4:
        assert (-1) ** len(lab.e) == -1


def test_torus_order_formula():
    lab = tori.TorusLabel((1,), (1,))
    assert tori.torus_order(lab, 3) == 8
    lab2 = tori.TorusLabel((), (2,))
    assert tori.torus_order(lab2, 3) == 10


@pytest.mark.parametrize("dim,q,sign", [(3, 3, 1), (5, 3, 1), (4, 3, 1),
                                        (4, 3, -1), (4, 2, 1), (4, 2, -1),
                                        (5, 2, 1), (3, 5, 1)])
def test_catalog_builds_and_checks(dim, q, sign):
    kind = "SO" if q % 2 else "Omega"
    G = matgrp.build_group(kind, dim, q, sign=sign)
    cat = tori.catalog(G)
    assert len(cat) == len(tori.labels(G.logical_dim, sign))
    for T in cat:
        assert T.order == tori.torus_order(T.label, q)
        assert T.weyl_order == tori.torus_weyl_order(T.label, G.logical_dim)
        assert len(T.elements()) == T.order
        for m in T.elements():
            assert G.contains(m)


def test_torus_is_abelian(so5):
    for T in tori.catalog(so5):
        a, b = T.gens[0], T.gens[-1]
        F = so5.F
        assert linalg.mat_mul(F, a, b) == linalg.mat_mul(F, b, a)


def test_exponent_map(so5):
    for T in tori.catalog(so5):
        M = tori.exponent_lcm(T)
        assert T.order % 1 == 0 and M >= 1
        # exponents form a faithful coordinate system
        assert len(set(T.exponents.values())) == T.order
        for m, exps in T.exponents.items():
            o = so5.element_order(m)
            assert M % o == 0


def test_characters_pair_to_exponents(so5):
    T = tori.catalog(so5)[0]
    M = tori.exponent_lcm(T)
    chars = tori.characters(T)
    assert len(chars) == T.order
    # each character sends a torus element to a power of a fixed M-th root;
    # the pairing must be a homomorphism in the exponent
    b = chars[1] if len(chars) > 1 else chars[0]
    for m, exps in list(T.exponents.items())[:6]:
        k = tori.character_exponent(T, b, exps, M)
        assert 0 <= k < M


def test_twin_tori_intersect_differently(so4p):
    cat = tori.catalog(so4p)
    twins = [T for T in cat if T.label.branch]
    assert len(twins) == 2
    a, b = twins
    assert a.order == b.order
    ea = set(a.elements())
    eb = set(b.elements())
    assert ea != eb
