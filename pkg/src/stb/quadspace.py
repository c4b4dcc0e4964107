"""Quadratic and symplectic spaces over GF(q) with exact Witt decomposition.

A quadratic space stores the upper-triangular Gram matrix U of the form
Q(v) = v^T U v; the polar form B(u, v) = Q(u + v) - Q(u) - Q(v) is derived,
which keeps everything valid in characteristic 2 (where B is alternating and
carries less information than Q).  Vectors act as columns: an isometry g
satisfies Q(g v) = Q(v).

Standard models:
  * even dim 2m, plus type:  m hyperbolic planes, basis ordered
    e1, f1, e2, f2, ..., with Q(e) = Q(f) = 0 and B(e, f) = 1;
  * even dim 2m, minus type: m-1 hyperbolic planes followed by the
    anisotropic plane  x^2 - nu y^2  (q odd, nu the smallest nonsquare)
    or  x^2 + xy + c y^2  with absolute trace of c equal to 1 (q even);
  * odd dim 2m+1 (q odd):    m hyperbolic planes followed by <a>,
    a in {1, nu}; the two choices give the same isometry group but sit
    differently inside a bigger space.
"""

import itertools

from . import linalg


class QuadSpace:
    def __init__(self, F, upper):
        self.F = F
        self.upper = tuple(tuple(row) for row in upper)
        self.dim = len(self.upper)
        for i, row in enumerate(self.upper):
            if len(row) != self.dim:
                raise ValueError("Gram matrix must be square")
            if any(row[j] for j in range(i)):
                raise ValueError("Gram matrix must be upper triangular")
        # polar form: U + U^T (diagonal doubles away in characteristic 2)
        n = self.dim
        self.bmat = tuple(
            tuple(F.add(self.upper[i][j] if i <= j else 0,
                        self.upper[j][i] if j <= i else 0)
                  for j in range(n))
            for i in range(n))

    def __repr__(self):
        return f"QuadSpace(dim={self.dim}, q={self.F.q})"

    def Q(self, v):
        F = self.F
        s = 0
        for i in range(self.dim):
            if not v[i]:
                continue
            row = self.upper[i]
            for j in range(i, self.dim):
                if row[j] and v[j]:
                    s = F.add(s, F.mul(F.mul(v[i], v[j]), row[j]))
        return s

    def B(self, u, v):
        F = self.F
        s = 0
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.bmat[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    s = F.add(s, F.mul(F.mul(ui, vj), row[j]))
        return s

    def is_nondegenerate(self):
        return linalg.det(self.F, self.bmat) != 0

    def is_isometry(self, g):
        F = self.F
        n = self.dim
        cols = linalg.transpose(g)
        for j in range(n):
            ej = tuple(1 if t == j else 0 for t in range(n))
            if self.Q(cols[j]) != self.Q(ej):
                return False
        for i in range(n):
            for j in range(i + 1, n):
                bij = self.bmat[i][j]
                if self.B(cols[i], cols[j]) != bij:
                    return False
        return True

    def vectors(self):
        """All vectors, coefficient-lexicographic (last coordinate fastest)."""
        return itertools.product(range(self.F.q), repeat=self.dim)

    def nonzero_vectors(self):
        for v in self.vectors():
            if any(v):
                yield v

    def projective_vectors(self):
        """One representative per line: first nonzero coordinate equals 1."""
        for v in self.nonzero_vectors():
            for c in v:
                if c:
                    lead = c
                    break
            if lead == 1:
                yield v

    def singular_count(self):
        """|{v : Q(v) = 0}| including the zero vector."""
        return sum(1 for v in self.vectors() if self.Q(v) == 0)

    def restrict(self, basis):
        """The quadratic space induced on the span of the given (independent)
        vectors, in the coordinates of that basis."""
        F = self.F
        d = len(basis)
        U = [[0] * d for _ in range(d)]
        for i in range(d):
            U[i][i] = self.Q(basis[i])
            for j in range(i + 1, d):
                U[i][j] = self.B(basis[i], basis[j])
        return QuadSpace(F, U)

    def scale(self, c):
        """The space with form c*Q; same isometry group."""
        F = self.F
        return QuadSpace(F, [[F.mul(c, x) for x in row] for row in self.upper])

    # -- Witt decomposition ------------------------------------------------

    def witt_decompose(self):
        """Greedy hyperbolic-plane peeling.

        Returns (pairs, anis) where pairs is a list of (e, f) ambient vectors
        with Q(e) = Q(f) = 0, B(e, f) = 1, mutually orthogonal planes, and
        anis is a basis of the remaining anisotropic complement (dimension at
        most 2).  Deterministic: the first singular vector in coefficient
        order is taken each round."""
        F = self.F
        n = self.dim
        basis = [tuple(1 if t == i else 0 for t in range(n)) for i in range(n)]
        pairs = []
        while basis:
            d = len(basis)
            u = None
            for coeffs in itertools.product(range(F.q), repeat=d):
                if not any(coeffs):
                    continue
                cand = tuple(
                    F_sum(F, (F.mul(c, b[t]) for c, b in zip(coeffs, basis)))
                    for t in range(n))
                if self.Q(cand) == 0:
                    u = cand
                    break
            if u is None:
                break
            v = None
            for b in basis:
                if self.B(u, b) != 0:
                    v = b
                    break
            if v is None:
                raise ArithmeticError("degenerate restriction in Witt peeling")
            v = linalg.vec_scale(F, v, F.inv(self.B(u, v)))
            f = linalg.vec_sub(F, v, linalg.vec_scale(F, u, self.Q(v)))
            if self.Q(f) != 0 or self.B(u, f) != 1:
                raise AssertionError("hyperbolic partner construction failed")
            pairs.append((u, f))
            rows = []
            for b in basis:
                rows.append((self.B(u, b), self.B(f, b)))
            # coefficients x with sum x_i B(u, b_i) = 0 = sum x_i B(f, b_i)
            A = tuple(zip(*rows))
            ker = linalg.kernel_basis(F, A)
            basis = [
                tuple(F_sum(F, (F.mul(c, b[t]) for c, b in zip(coeffs, basis)))
                      for t in range(n))
                for coeffs in ker]
        if len(basis) > 2:
            raise AssertionError("anisotropic part has dimension > 2")
        for b in basis:
            if self.Q(b) == 0:
                raise AssertionError("anisotropic part contains a singular vector")
        return pairs, basis

    def witt_index(self):
        return len(self.witt_decompose()[0])

    def type_sign(self):
        """+1 or -1 for even-dimensional spaces, None for odd."""
        if self.dim % 2:
            return None
        pairs, anis = self.witt_decompose()
        return 1 if not anis else -1

    def defect(self):
        """0 for split (plus) even-dim spaces, 1 for minus; odd dims get 0."""
        if self.dim % 2:
            return 0
        return 0 if self.type_sign() == 1 else 1

    # -- isometries between spaces ------------------------------------------

    def isometry_onto(self, other):
        """A matrix phi with other.Q(phi v) = self.Q(v) for all v, or None
        if the spaces are not isometric.  Both must be nondegenerate and of
        equal dimension over the same field."""
        F = self.F
        if other.F != F or other.dim != self.dim:
            return None
        sp, sa = self.witt_decompose()
        op, oa = other.witt_decompose()
        if len(sp) != len(op) or len(sa) != len(oa):
            return None
        src = [v for pair in sp for v in pair]
        dst = [v for pair in op for v in pair]
        if len(sa) == 1:
            a = self.Q(sa[0])
            b = other.Q(oa[0])
            ratio = F.div(a, b)
            if not F.is_square(ratio):
                return None
            dst.append(linalg.vec_scale(F, oa[0], F.sqrt(ratio)))
            src.append(sa[0])
        elif len(sa) == 2:
            t1, t2 = self.Q(sa[0]), self.Q(sa[1])
            t12 = self.B(sa[0], sa[1])
            found = None
            for c1, c2 in itertools.product(range(F.q), repeat=2):
                if not (c1 or c2):
                    continue
                w1 = linalg.vec_add(F, linalg.vec_scale(F, oa[0], c1),
                                    linalg.vec_scale(F, oa[1], c2))
                if other.Q(w1) != t1:
                    continue
                for d1, d2 in itertools.product(range(F.q), repeat=2):
                    w2 = linalg.vec_add(F, linalg.vec_scale(F, oa[0], d1),
                                        linalg.vec_scale(F, oa[1], d2))
                    if other.Q(w2) == t2 and other.B(w1, w2) == t12:
                        # w1, w2 independent iff c1 d2 - c2 d1 != 0
                        if F.sub(F.mul(c1, d2), F.mul(c2, d1)) != 0:
                            found = (w1, w2)
                            break
                if found:
                    break
            if not found:
                return None
            src.extend(sa)
            dst.extend(found)
        Ms = linalg.transpose(tuple(src))
        Md = linalg.transpose(tuple(dst))
        phi = linalg.mat_mul(F, Md, linalg.mat_inv(F, Ms))
        for j in range(self.dim):
            ej = tuple(1 if t == j else 0 for t in range(self.dim))
            col = tuple(phi[i][j] for i in range(self.dim))
            if other.Q(col) != self.Q(ej):
                raise AssertionError("isometry construction failed")
        cols = linalg.transpose(phi)
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if other.B(cols[i], cols[j]) != self.bmat[i][j]:
                    raise AssertionError("isometry construction failed")
        return phi

    # -- reflections / orthogonal transvections -------------------------------

    def reflection(self, v):
        """x -> x - B(x, v)/Q(v) * v.  For q odd this is the reflection in v;
        for q even the same formula is the orthogonal transvection.  Needs
        Q(v) != 0."""
        F = self.F
        qv = self.Q(v)
        if qv == 0:
            raise ValueError("reflection vector must be anisotropic")
        inv = F.inv(qv)
        n = self.dim
        cols = []
        for j in range(n):
            ej = tuple(1 if t == j else 0 for t in range(n))
            c = F.mul(self.B(ej, v), inv)
            cols.append(linalg.vec_sub(F, ej, linalg.vec_scale(F, v, c)))
        return linalg.transpose(tuple(cols))

    def totally_singular_planes(self):
        """All 2-dimensional totally singular subspaces, as canonical RREF
        row pairs."""
        F = self.F
        sing = [v for v in self.projective_vectors() if self.Q(v) == 0]
        seen = set()
        out = []
        for i, u in enumerate(sing):
            for v in sing[i + 1:]:
                if self.B(u, v) != 0:
                    continue
                R, piv = linalg.rref(F, (u, v))
                if len(R) != 2:
                    continue
                if R not in seen:
                    seen.add(R)
                    out.append(R)
        return out


def F_sum(F, it):
    s = 0
    for x in it:
        s = F.add(s, x)
    return s


class SympSpace:
    """A nondegenerate symplectic space with alternating Gram matrix J,
    B(u, v) = u^T J v."""

    def __init__(self, F, J):
        self.F = F
        self.J = tuple(tuple(row) for row in J)
        self.dim = len(self.J)

    def __repr__(self):
        return f"SympSpace(dim={self.dim}, q={self.F.q})"

    def B(self, u, v):
        F = self.F
        s = 0
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.J[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    s = F.add(s, F.mul(F.mul(ui, vj), row[j]))
        return s

    def is_isometry(self, g):
        cols = linalg.transpose(g)
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                if self.B(cols[i], cols[j]) != self.J[i][j]:
                    return False
        return True

    def transvection(self, v, c=1):
        """x -> x + c * B(x, v) * v."""
        F = self.F
        n = self.dim
        cols = []
        for j in range(n):
            ej = tuple(1 if t == j else 0 for t in range(n))
            cols.append(linalg.vec_add(
                F, ej, linalg.vec_scale(F, v, F.mul(c, self.B(ej, v)))))
        return linalg.transpose(tuple(cols))

    def projective_vectors(self):
        for v in itertools.product(range(self.F.q), repeat=self.dim):
            if not any(v):
                continue
            for c in v:
                if c:
                    lead = c
                    break
            if lead == 1:
                yield v

    def vectors(self):
        return itertools.product(range(self.F.q), repeat=self.dim)


# -- standard models ---------------------------------------------------------


def hyperbolic_pair_block():
    return ((0, 1), (0, 0))


def standard_space(F, dim, sign=1, a=1):
    """The standard quadratic space of the given dimension and type.

    sign: +1 or -1, meaningful for even dim (ignored for odd).
    a: the anisotropic line scalar for odd dim (1 or a nonsquare), q odd.
    """
    n = dim
    U = [[0] * n for _ in range(n)]
    m = n // 2
    if n % 2 == 0 and sign == -1:
        m -= 1
    for i in range(m):
        U[2 * i][2 * i + 1] = 1
    if n % 2 == 1:
        if F.p == 2:
            raise ValueError("odd-dimensional quadratic spaces need q odd; "
                             "use a symplectic space instead")
        U[n - 1][n - 1] = a % F.q
    elif sign == -1:
        if F.p == 2:
            c = next(x for x in range(1, F.q) if F.trace(x) == 1)
            U[n - 2][n - 2] = 1
            U[n - 2][n - 1] = 1
            U[n - 1][n - 1] = c
        else:
            U[n - 2][n - 2] = 1
            U[n - 1][n - 1] = F.neg(F.nonsquare())
    space = QuadSpace(F, U)
    if not space.is_nondegenerate():
        raise AssertionError("standard space is degenerate")
    return space


def symplectic_space(F, dim):
    if dim % 2:
        raise ValueError("symplectic spaces are even-dimensional")
    n = dim
    J = [[0] * n for _ in range(n)]
    for i in range(n // 2):
        J[2 * i][2 * i + 1] = 1
        J[2 * i + 1][2 * i] = F.neg(1)
    return SympSpace(F, J)


def line_space(F, a):
    """The one-dimensional space <a>: Q(x) = a x^2."""
    return QuadSpace(F, ((a,),))


def direct_sum(*spaces):
    """Orthogonal direct sum of quadratic spaces over a common field."""
    F = spaces[0].F
    U = linalg.block_diag(*[s.upper for s in spaces])
    return QuadSpace(F, U)
