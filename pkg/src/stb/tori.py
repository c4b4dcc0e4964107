"""Maximal tori of the orthogonal and symplectic groups, by explicit
block construction.

A torus class is labeled by a signed cycle type (d, e): each part i of d
contributes a 2i-dimensional block carrying a Singer cycle of GL_i(q) in a
hyperbolic-pair basis (order q^i - 1); each part j of e contributes a
2j-dimensional block carrying multiplication by a norm-one-ish generator of
order q^j + 1 on GF(q^{2j}) with the quadratic form Tr(x^{q^j + 1}); odd
ambient dimension adds a fixed anisotropic line.  The adapted block-sum
space is carried onto the group's own space by an explicit isometry.

In even ambient dimension the labels with e empty and all parts of d even
occur twice ("twins"): the second copy is the conjugate of the first by a
fixed isometry outside SO (q odd) or outside Omega (q even).
"""

import itertools
from dataclasses import dataclass, field as dc_field

from . import linalg, quadspace, weyl
from .gf import field


# ---------------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class TorusLabel:
    d: tuple
    e: tuple
    branch: int = 0

    @property
    def rank(self):
        return sum(self.d) + sum(self.e)

    def __str__(self):
        bits = []
        if self.d:
            bits.append("d=" + "+".join(str(i) for i in self.d))
        if self.e:
            bits.append("e=" + "+".join(str(j) for j in self.e))
        if not bits:
            bits.append("trivial")
        if self.branch:
            bits.append(f"branch{self.branch}")
        return ",".join(bits)


def _signed_partitions(n):
    """All (d, e) with sum(d) + sum(e) = n, parts >= 1, sorted tuples."""
    def partitions(m):
        if m == 0:
            yield ()
            return
        for first in range(1, m + 1):
            for rest in partitions(m - first):
                if not rest or first <= rest[0]:
                    yield (first,) + rest

    out = []
    for k in range(n + 1):
        for d in partitions(k):
            for e in partitions(n - k):
                out.append((tuple(sorted(d)), tuple(sorted(e))))
    return out


def labels(logical_dim, sign=1):
    """Torus class labels of the group with this (logical) dimension/type."""
    n = logical_dim // 2
    out = []
    if logical_dim % 2 == 1:
        for d, e in _signed_partitions(n):
            out.append(TorusLabel(d, e))
        return out
    for d, e in _signed_partitions(n):
        if (-1) ** len(e) != sign:
            continue
        if weyl.is_exceptional_label((d, e)):
            out.append(TorusLabel(d, e, branch=1))
            out.append(TorusLabel(d, e, branch=2))
        else:
            out.append(TorusLabel(d, e))
    return out


def torus_order(label, q):
    n = 1
    for i in label.d:
        n *= q ** i - 1
    for j in label.e:
        n *= q ** j + 1
    return n


def torus_weyl_order(label, logical_dim):
    ambient = "B" if logical_dim % 2 == 1 else "D"
    return weyl.torus_weyl_order(ambient, (label.d, label.e))


# ---------------------------------------------------------------------------
# blocks


def _mult_matrix(K, c):
    """Multiplication by c on GF(p^k) in the power basis, over GF(p)."""
    k = K.k
    cols = []
    for j in range(k):
        basis_j = K.p ** j if j else 1
        cols.append(K.digits(K.mul(c, basis_j)))
    return linalg.transpose(tuple(cols))


def _plus_block(F, i):
    """(space, generator, order) for a d-part: Singer of GL_i(q) acting on
    e-coordinates, transpose-inverse on f-coordinates of i hyperbolic pairs."""
    q = F.q
    space = quadspace.standard_space(F, 2 * i, 1)
    K = field(F.p, i)
    h = _mult_matrix(K, K.gen)
    hit = linalg.transpose(linalg.mat_inv(F, h))
    n = 2 * i
    M = [[0] * n for _ in range(n)]
    for r in range(i):
        for c in range(i):
            M[2 * r][2 * c] = h[r][c]
            M[2 * r + 1][2 * c + 1] = hit[r][c]
    g = tuple(tuple(row) for row in M)
    if not space.is_isometry(g):
        raise AssertionError("plus block generator is not an isometry")
    return space, g, q ** i - 1


def _minus_block(F, j):
    """(space, generator, order) for an e-part: multiplication by an element
    of order q^j + 1 on GF(q^{2j}) with Q(x) = Tr(x^{q^j + 1})."""
    q = F.q
    L = field(F.p, 2 * j)
    delta = L.pow(L.gen, q ** j - 1)

    def norm_down(x):
        return L.pow(x, q ** j + 1)

    def tr_K_to_prime(x):
        s = 0
        for t in range(j):
            s = L.add(s, L.frobenius(x, t))
        if s >= F.q:
            raise AssertionError("trace left the prime field")
        return s

    def Qfun(vec):
        x = L.from_digits(vec)
        return tr_K_to_prime(norm_down(x))

    n = 2 * j
    basis = [tuple(1 if t == c else 0 for t in range(n)) for c in range(n)]
    U = [[0] * n for _ in range(n)]
    for c in range(n):
        U[c][c] = Qfun(basis[c])
    for c1 in range(n):
        for c2 in range(c1 + 1, n):
            both = tuple(1 if t in (c1, c2) else 0 for t in range(n))
            U[c1][c2] = F.sub(F.sub(Qfun(both), U[c1][c1]), U[c2][c2])
    space = quadspace.QuadSpace(F, tuple(tuple(r) for r in U))
    if space.type_sign() != -1:
        raise AssertionError("norm-form block is not of minus type")
    g = _mult_matrix(L, delta)
    if not space.is_isometry(g):
        raise AssertionError("minus block generator is not an isometry")
    return space, g, q ** j + 1


# ---------------------------------------------------------------------------
# assembled tori


@dataclass
class Torus:
    label: TorusLabel
    group: object
    gens: list
    factor_orders: list
    order: int
    weyl_order: int
    exponents: dict = dc_field(repr=False, default=None)

    def elements(self):
        return list(self.exponents.keys())


def _block_diag_embed(mats, dims):
    total = sum(dims)
    M = [[0] * total for _ in range(total)]
    at = 0
    for g, d in zip(mats, dims):
        for r in range(d):
            for c in range(d):
                M[at + r][at + c] = g[r][c]
        at += d
    return tuple(tuple(r) for r in M)


def _symplectic_basis_change(F, space_src, dim):
    """Columns forming a symplectic basis of (F^dim, B_src), interleaved."""
    pool = [tuple(1 if t == c else 0 for t in range(dim)) for c in range(dim)]
    basis = []
    while pool:
        e = pool.pop(0)
        f = None
        for w in pool:
            if space_src.B(e, w) != 0:
                f = w
                break
        if f is None:
            raise AssertionError("degenerate block pairing")
        pool.remove(f)
        f = linalg.vec_scale(F, f, F.inv(space_src.B(e, f)))
        cleaned = []
        for w in pool:
            w1 = linalg.vec_sub(F, w, linalg.vec_scale(F, e, space_src.B(f, w)))
            w1 = linalg.vec_sub(F, w1, linalg.vec_scale(F, f, space_src.B(w1, e)))
            cleaned.append(w1)
        pool = cleaned
        basis.extend([e, f])
    return linalg.transpose(tuple(basis))


def build_torus(G, label):
    """Construct the maximal torus of this class inside the built group G."""
    F = G.F
    q = F.q
    blocks = []
    for i in label.d:
        blocks.append(_plus_block(F, i))
    for j in label.e:
        blocks.append(_minus_block(F, j))
    dims = [sp.dim for sp, _, _ in blocks]
    orders = [o for _, _, o in blocks]

    if G.is_symplectic_model:
        # transport each block through its polar (symplectic) form
        total = sum(dims)
        if total != G.dim:
            raise AssertionError("torus blocks do not fill the space")
        adapted = quadspace.SympSpace(
            F, _polar_sum([sp for sp, _, _ in blocks]))
        gens_adapted = []
        for t in range(len(blocks)):
            mats = [blocks[s][1] if s == t else linalg.identity(dims[s])
                    for s in range(len(blocks))]
            gens_adapted.append(_block_diag_embed(mats, dims))
        C = _symplectic_basis_change(F, adapted, total)
        Cinv = linalg.mat_inv(F, C)
        gens = [linalg.mat_mul(F, Cinv, linalg.mat_mul(F, g, C))
                for g in gens_adapted]
    else:
        spaces = [sp for sp, _, _ in blocks]
        if G.logical_dim % 2 == 1:
            adapted = None
            for a in (1, F.nonsquare()):
                cand = quadspace.direct_sum(
                    *(spaces + [quadspace.line_space(F, a)]))
                phi = cand.isometry_onto(G.space)
                if phi is not None:
                    adapted = cand
                    break
            if adapted is None:
                raise AssertionError("no isometric adapted space found")
            dims_full = dims + [1]
        else:
            adapted = quadspace.direct_sum(*spaces) if spaces else None
            if adapted is None or adapted.dim != G.dim:
                raise AssertionError("torus blocks do not fill the space")
            if adapted.type_sign() != G.space.type_sign():
                raise AssertionError("adapted type differs from ambient type")
            phi = adapted.isometry_onto(G.space)
            if phi is None:
                raise AssertionError("no isometry onto the ambient space")
            dims_full = dims
        phi_inv = linalg.mat_inv(F, phi)
        gens = []
        for t in range(len(blocks)):
            mats = [blocks[s][1] if s == t else linalg.identity(dims[s])
                    for s in range(len(blocks))]
            if G.logical_dim % 2 == 1:
                mats.append(((1,),))
            g_ad = _block_diag_embed(mats, dims_full)
            gens.append(linalg.mat_mul(F, phi, linalg.mat_mul(F, g_ad, phi_inv)))

    if label.branch == 2:
        kappa = _twin_conjugator(G)
        kinv = linalg.mat_inv(F, kappa)
        gens = [linalg.mat_mul(F, kappa, linalg.mat_mul(F, g, kinv))
                for g in gens]

    # enumerate and sanity check
    exps = {}
    idmat = linalg.identity(G.dim)
    for tup in itertools.product(*(range(o) for o in orders)):
        m = idmat
        for g, a in zip(gens, tup):
            if a:
                m = linalg.mat_mul(F, m, linalg.mat_pow(F, g, a))
        if m in exps:
            raise AssertionError("torus factors are not independent")
        exps[m] = tup
    expected = torus_order(label, q)
    if len(exps) != expected:
        raise AssertionError(
            f"torus order {len(exps)} != predicted {expected}")
    for m in exps:
        if not G.contains(m):
            raise AssertionError("torus element escaped the group")
    for g1 in gens:
        for g2 in gens:
            if linalg.mat_mul(F, g1, g2) != linalg.mat_mul(F, g2, g1):
                raise AssertionError("torus is not abelian")
    return Torus(label=label, group=G, gens=gens, factor_orders=orders,
                 order=expected,
                 weyl_order=torus_weyl_order(label, G.logical_dim),
                 exponents=exps)


def _polar_sum(spaces):
    total = sum(sp.dim for sp in spaces)
    J = [[0] * total for _ in range(total)]
    at = 0
    for sp in spaces:
        d = sp.dim
        basis = [tuple(1 if t == c else 0 for t in range(d)) for c in range(d)]
        for r in range(d):
            for c in range(d):
                J[at + r][at + c] = sp.B(basis[r], basis[c])
        at += d
    return tuple(tuple(r) for r in J)


def _twin_conjugator(G):
    """A fixed isometry outside SO (q odd) or outside Omega (q even)."""
    space = G.space
    if G.is_symplectic_model:
        raise AssertionError("symplectic groups have no torus twins")
    v = next(w for w in space.projective_vectors() if space.Q(w) != 0)
    return space.reflection(v)


def catalog(G):
    """All maximal tori of G, one per class label (twins included)."""
    sign = G.sign if G.logical_dim % 2 == 0 else 1
    return [build_torus(G, lab) for lab in labels(G.logical_dim, sign)]


# ---------------------------------------------------------------------------
# characters of a torus


def characters(T):
    """All characters as exponent tuples b; chi_b(t) with exponents a is
    zeta_M^{sum_i a_i b_i M / n_i} for M = lcm of the factor orders."""
    return list(itertools.product(*(range(o) for o in T.factor_orders)))


def character_exponent(T, b, a, M):
    """Exponent j with chi_b(element with exponents a) = zeta_M^j."""
    j = 0
    for bi, ai, ni in zip(b, a, T.factor_orders):
        j += ai * bi * (M // ni)
    return j % M


def exponent_lcm(T):
    M = 1
    for o in T.factor_orders:
        M = M * o // _gcd(M, o)
    return M


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
