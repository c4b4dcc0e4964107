"""Signed-permutation Weyl groups of types B_n and D_n.

Elements are pairs (perm, signs): w(b_i) = signs[i] * b_{perm[i]} on a basis
b_0..b_{n-1}, signs in {1, -1}.  Composition is function composition,
mul(x, y) = x after y.

Class labels are signed cycle types (d, e): d lists the lengths of positive
cycles (sign product +1 around the cycle), e the lengths of negative ones.
W(D_n) is the even-sign-count subgroup; a B_n-class with label (d, e) meets
D_n iff sum(e) is even, and splits into two D_n-classes iff e is empty and
every part of d is even.
"""

import itertools
from functools import lru_cache


def identity(n):
    return (tuple(range(n)), (1,) * n)


def mul(x, y):
    """x after y."""
    px, sx = x
    py, sy = y
    n = len(px)
    perm = tuple(px[py[i]] for i in range(n))
    signs = tuple(sy[i] * sx[py[i]] for i in range(n))
    return (perm, signs)


def inv(w):
    p, s = w
    n = len(p)
    q = [0] * n
    for i in range(n):
        q[p[i]] = i
    return (tuple(q), tuple(s[q[j]] for j in range(n)))


def neg_count(w):
    return sum(1 for c in w[1] if c == -1)


def in_D(w):
    return neg_count(w) % 2 == 0


def elements_B(n):
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield (perm, signs)


def elements_D(n):
    for w in elements_B(n):
        if in_D(w):
            yield w


def generators_B(n):
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append((tuple(perm), (1,) * n))
    signs = [1] * n
    signs[n - 1] = -1
    gens.append((tuple(range(n)), tuple(signs)))
    return gens


def generators_D(n):
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append((tuple(perm), (1,) * n))
    if n >= 2:
        perm = list(range(n))
        perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
        signs = [1] * n
        signs[n - 2] = -1
        signs[n - 1] = -1
        gens.append((tuple(perm), tuple(signs)))
    return gens


def cycle_label(w):
    """(d, e) sorted tuples of positive / negative cycle lengths."""
    perm, signs = w
    n = len(perm)
    seen = [False] * n
    d = []
    e = []
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        sgn = 1
        j = i
        while not seen[j]:
            seen[j] = True
            sgn *= signs[j]
            j = perm[j]
            ln += 1
        (d if sgn == 1 else e).append(ln)
    return (tuple(sorted(d)), tuple(sorted(e)))


def is_exceptional_label(label):
    d, e = label
    return len(e) == 0 and all(part % 2 == 0 for part in d)


def centralizer_order_formula(label):
    """|C_{W(B_n)}(w)| for w with signed cycle type (d, e)."""
    d, e = label
    total = 1
    for part in set(d):
        cnt = d.count(part)
        total *= (2 * part) ** cnt * _fact(cnt)
    for part in set(e):
        cnt = e.count(part)
        total *= (2 * part) ** cnt * _fact(cnt)
    return total


def _fact(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def torus_weyl_order(ambient, label):
    """Order of the torus Weyl group N(T)/T for the torus with this label.

    ambient "B": odd-dimensional orthogonal group, full B_n centralizer.
    ambient "D": even-dimensional; half the B_n centralizer except for the
    split (exceptional) labels, whose D-centralizer is the whole thing.
    """
    base = centralizer_order_formula(label)
    if ambient == "B":
        return base
    if ambient == "D":
        return base if is_exceptional_label(label) else base // 2
    raise ValueError(ambient)


# ---------------------------------------------------------------------------
# brute conjugacy classes


def conjugacy_classes(wtype, n):
    """Brute-force conjugacy classes as (label, branch, size, centralizer).

    branch is 0 for ordinary classes; two D_n classes sharing a split label
    get branches 1 and 2 (ordered by their minimal elements)."""
    if wtype == "B":
        universe = list(elements_B(n))
        gens = generators_B(n)
    elif wtype == "D":
        universe = list(elements_D(n))
        gens = generators_D(n)
    else:
        raise ValueError(wtype)
    order = len(universe)
    gpairs = [(g, inv(g)) for g in gens]
    unseen = set(universe)
    classes = []
    for w in universe:
        if w not in unseen:
            continue
        orbit = {w}
        stack = [w]
        while stack:
            x = stack.pop()
            for g, gi in gpairs:
                y = mul(g, mul(x, gi))
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        unseen -= orbit
        classes.append((cycle_label(w), len(orbit)))
    out = []
    bylabel = {}
    for label, size in classes:
        bylabel.setdefault(label, []).append(size)
    for label, sizes in sorted(bylabel.items()):
        if len(sizes) == 1:
            out.append((label, 0, sizes[0], order // sizes[0]))
        else:
            if len(sizes) != 2 or not is_exceptional_label(label):
                raise AssertionError(f"unexpected splitting at {label}")
            for branch, size in enumerate(sorted(sizes), start=1):
                out.append((label, branch, size, order // size))
    return out


# ---------------------------------------------------------------------------
# parabolic-type double cosets and induced-character norms


def subgroup_S(n):
    """The sign-free symmetric group inside W(B_n)."""
    return [(perm, (1,) * n) for perm in itertools.permutations(range(n))]


def _cosets(universe, subgroup):
    """Left cosets w*A: returns (reps, coset_of dict)."""
    coset_of = {}
    reps = []
    for w in universe:
        if w in coset_of:
            continue
        idx = len(reps)
        reps.append(w)
        for a in subgroup:
            coset_of[mul(w, a)] = idx
    return reps, coset_of


def double_cosets_orbit(universe, Agens, Aset, Bset):
    """|A \\ W / B| as the number of A-orbits on W/B."""
    reps, coset_of = _cosets(universe, Bset)
    total = len(reps)
    seen = [False] * total
    orbits = 0
    for start in range(total):
        if seen[start]:
            continue
        orbits += 1
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            for g in Agens:
                j = coset_of[mul(g, reps[i])]
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
    return orbits


def double_cosets_burnside(universe, Aset, Bset):
    """<Ind_A^W 1, Ind_B^W 1> as an explicit Burnside sum over W."""
    repsA, _ = _cosets(universe, Aset)
    repsB, _ = _cosets(universe, Bset)
    invA = [inv(x) for x in repsA]
    invB = [inv(x) for x in repsB]
    setA = set(Aset)
    setB = set(Bset)
    total = 0
    for w in universe:
        fa = 0
        for x, xi in zip(repsA, invA):
            if mul(xi, mul(w, x)) in setA:
                fa += 1
        if fa == 0:
            continue
        fb = 0
        for x, xi in zip(repsB, invB):
            if mul(xi, mul(w, x)) in setB:
                fb += 1
        total += fa * fb
    if total % len(universe) != 0:
        raise AssertionError("Burnside sum is not integral")
    return total // len(universe)


def _sym_gens(n):
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append((tuple(perm), (1,) * n))
    return gens if gens else [identity(n)]


@lru_cache(maxsize=None)
def self_norm(m, ambient):
    """<Ind_{S_m}^W 1, Ind_{S_m}^W 1> for W = W(B_m) or W(D_m), by two
    independent routes that must agree."""
    if ambient == "B":
        universe = list(elements_B(m))
    elif ambient == "D":
        universe = list(elements_D(m))
    else:
        raise ValueError(ambient)
    A = subgroup_S(m)
    a = double_cosets_orbit(universe, _sym_gens(m), A, A)
    b = double_cosets_burnside(universe, A, A)
    if a != b:
        raise AssertionError(f"double coset oracles disagree: {a} vs {b}")
    return a


@lru_cache(maxsize=None)
def cross_norm(m):
    """<Ind_{W_1}^W 1, Ind_{W_2}^W 1> in W = W(D_m), where W_1 = S_m and
    W_2 is its conjugate by the outer sign flip of one coordinate."""
    universe = list(elements_D(m))
    A = subgroup_S(m)
    signs = [1] * m
    signs[0] = -1
    t = (tuple(range(m)), tuple(signs))
    B = [mul(t, mul(a, t)) for a in A]
    gens = _sym_gens(m)
    a = double_cosets_orbit(universe, gens, A, B)
    b = double_cosets_burnside(universe, A, B)
    if a != b:
        raise AssertionError(f"double coset oracles disagree: {a} vs {b}")
    return a
