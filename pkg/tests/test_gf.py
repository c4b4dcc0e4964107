import pytest
from hypothesis import given, settings, strategies as st

from stb.gf import field, field_of_order


SMALL_QS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


@pytest.mark.parametrize("p,k", SMALL_QS)
def test_axioms_exhaustive(p, k):
    F = field(p, k)
    q = F.q
    els = list(range(q))
    for a in els:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    # commutativity and distributivity on all pairs/triples for tiny q
    for a in els:
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            if q <= 5:
                for c in els:
                    assert F.mul(a, F.add(b, c)) == \
                        F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p,k", SMALL_QS)
def test_multiplicative_group_cyclic(p, k):
    F = field(p, k)
    g = F.gen
    assert F.element_order(g) == F.q - 1
    seen = set()
    x = 1
    for _ in range(F.q - 1):
        seen.add(x)
        x = F.mul(x, g)
    assert seen == set(range(1, F.q))
    for a in range(1, F.q):
        assert (F.q - 1) % F.element_order(a) == 0


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3), (5, 2)])
def test_frobenius_trace_norm(p, k):
    F = field(p, k)
    for a in range(F.q):
        fa = F.frobenius(a)
        assert fa == F.pow(a, p)
        # Frobenius is additive and fixes the prime field
        for b in range(F.q):
            assert F.frobenius(F.add(a, b)) == F.add(fa, F.frobenius(b))
        conj = [F.frobenius(a, i) for i in range(k)]
        tr = 0
        nm = 1
        for c in conj:
            tr = F.add(tr, c)
            nm = F.mul(nm, c)
        assert F.trace(a) == tr
        assert F.norm(a) == nm
        assert tr < p and nm < p  # land in the prime subfield
    assert any(F.trace(a) != 0 for a in range(F.q))


@pytest.mark.parametrize("p,k", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_squares(p, k):
    F = field(p, k)
    squares = {F.mul(a, a) for a in range(1, F.q)}
    assert len(squares) == (F.q - 1) // 2
    for a in range(1, F.q):
        assert F.is_square(a) == (a in squares)
        assert F.square_class(a) == (1 if a in squares else -1)
        if a in squares:
            r = F.sqrt(a)
            assert F.mul(r, r) == a
    assert F.square_class(0) == 0
    assert F.nonsquare() not in squares


def test_digits_roundtrip():
    F = field(3, 2)
    for a in range(F.q):
        assert F.from_digits(F.digits(a)) == a


def test_field_of_order():
    assert field_of_order(9) is field(3, 2)
    assert field_of_order(7) is field(7)
    assert field_of_order(8).k == 3
    with pytest.raises(ValueError):
        field_of_order(6)
    with pytest.raises(ValueError):
        field_of_order(1)


@given(st.integers(0, 24), st.integers(0, 24), st.integers(0, 24))
@settings(max_examples=200, deadline=None)
def test_gf25_ring_axioms(a, b, c):
    F = field(5, 2)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


# ---------------------------------------------------------------------------
# polynomial kit


def test_pdivmod_identity():
    F = field(5)
    f = [1, 2, 0, 3, 4]
    g = [2, 1, 1]
    quo, rem = F.pdivmod(list(f), list(g))
    back = F.padd(F.pmul(quo, g), rem)
    assert F.ptrim(list(back)) == F.ptrim(list(f))
    assert len(rem) < len(g)


def test_pgcd_divides():
    F = field(3)
    f = F.pmul([1, 1], [2, 1, 1])
    g = F.pmul([1, 1], [2, 1])
    d = F.pgcd(list(f), list(g))
    _, r1 = F.pdivmod(list(f), list(d))
    _, r2 = F.pdivmod(list(g), list(d))
    assert not r1 and not r2
    assert d == F.pmonic([1, 1])


IRR_COUNTS = [(2, 2, 1), (2, 3, 2), (2, 4, 3), (3, 2, 3), (3, 3, 8),
              (5, 2, 10)]


@pytest.mark.parametrize("q,d,count", IRR_COUNTS)
def test_irreducible_counts(q, d, count):
    F = field_of_order(q)
    irr = F.irreducibles(d)
    assert len(irr) == count
    for f in irr:
        assert len(f) == d + 1 and f[-1] == 1
        for x in range(q):
            if d > 1:
                assert F.peval(list(f), x) != 0


def test_pfactor_reassembles():
    F = field(3)
    f = [2, 1, 0, 1, 1, 2]
    fac = F.pfactor(list(f))
    prod = [F.ptrim(list(f))[-1]]  # leading coefficient
    for g, mult in fac:
        for _ in range(mult):
            prod = F.pmul(prod, list(g))
    assert F.ptrim(list(prod)) == F.ptrim(list(f))
    total = sum((len(g) - 1) * m for g, m in fac)
    assert total == len(F.ptrim(list(f))) - 1


def test_preciprocal_involution():
    F = field(5)
    f = [2, 0, 3, 1]
    r = F.preciprocal(list(f))
    assert F.preciprocal(list(r)) == F.pmonic(list(f))
    # roots invert: x a root of f iff 1/x a root of the reciprocal
    for x in range(1, 5):
        if F.peval(list(f), x) == 0:
            assert F.peval(list(r), F.inv(x)) == 0
