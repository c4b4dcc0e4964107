import pytest

from stb import weyl


def test_group_sizes():
    assert len(list(weyl.elements_B(3))) == 48
    assert len(list(weyl.elements_D(3))) == 24
    assert len(list(weyl.elements_B(4))) == 384
    assert len(list(weyl.elements_D(4))) == 192


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_b_centralizer_formula(n):
    for label, branch, size, cent in weyl.conjugacy_classes("B", n):
        assert branch == 0
        assert cent == weyl.centralizer_order_formula(label)
        assert size * cent == 2 ** n * _fact(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_d_centralizer_and_splitting(n):
    order = 2 ** (n - 1) * _fact(n)
    seen = {}
    for label, branch, size, cent in weyl.conjugacy_classes("D", n):
        assert cent == weyl.torus_weyl_order("D", label)
        assert size * cent == order
        seen.setdefault(label, []).append(branch)
    for label, branches in seen.items():
        if weyl.is_exceptional_label(label):
            assert sorted(branches) == [1, 2]
        else:
            assert branches == [0]


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_label_partition_counts():
    # labels of W(B_n) classes are the signed partitions of n
    for n in (2, 3, 4):
        labels = {lab for lab, *_ in weyl.conjugacy_classes("B", n)}
        assert all(sum(d) + sum(e) == n for d, e in labels)


def test_cycle_label_examples():
    w = ((1, 0, 2), (1, 1, -1))
    d, e = weyl.cycle_label(w)
    assert d == (2,) and e == (1,)
    ident = ((0, 1, 2), (1, 1, 1))
    assert weyl.cycle_label(ident) == ((1, 1, 1), ())


def test_exceptional_labels():
    assert weyl.is_exceptional_label(((2, 2), ()))
    assert weyl.is_exceptional_label(((4,), ()))
    assert not weyl.is_exceptional_label(((1, 2), ()))
    assert not weyl.is_exceptional_label(((2,), (2,)))


def test_self_norm_values():
    assert [weyl.self_norm(m, "B") for m in (1, 2, 3)] == [2, 3, 4]
    assert [weyl.self_norm(m, "D") for m in (1, 2, 3, 4)] == [1, 2, 2, 3]


def test_cross_norm_values():
    assert weyl.cross_norm(2) == 1
    assert weyl.cross_norm(4) == 2


def test_torus_weyl_order_b_vs_d():
    lab = ((2,), (1,))
    assert weyl.torus_weyl_order("B", lab) == \
        weyl.centralizer_order_formula(lab)
    assert weyl.torus_weyl_order("D", lab) == \
        weyl.centralizer_order_formula(lab) // 2
    split = ((2, 2), ())
    assert weyl.torus_weyl_order("D", split) == \
        weyl.centralizer_order_formula(split)
