"""Exact linear algebra over a GF instance.

Matrices are tuples of row tuples, vectors are tuples, and all arithmetic is
delegated to the field object, so everything works identically over prime and
extension fields.  Vectors transform as columns: a matrix g acts by g·v.
"""


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero_matrix(n, m=None):
    m = n if m is None else m
    return tuple(tuple(0 for _ in range(m)) for _ in range(n))


def transpose(A):
    return tuple(zip(*A)) if A else ()


def mat_add(F, A, B):
    return tuple(tuple(F.add(a, b) for a, b in zip(ra, rb))
                 for ra, rb in zip(A, B))


def mat_sub(F, A, B):
    return tuple(tuple(F.sub(a, b) for a, b in zip(ra, rb))
                 for ra, rb in zip(A, B))


def mat_neg(F, A):
    return tuple(tuple(F.neg(a) for a in row) for row in A)


def mat_scale(F, A, c):
    return tuple(tuple(F.mul(a, c) for a in row) for row in A)


def mat_mul(F, A, B):
    Bt = transpose(B)
    out = []
    for row in A:
        orow = []
        for col in Bt:
            s = 0
            for a, b in zip(row, col):
                if a and b:
                    s = F.add(s, F.mul(a, b))
            orow.append(s)
        out.append(tuple(orow))
    return tuple(out)


def mat_vec(F, A, v):
    out = []
    for row in A:
        s = 0
        for a, b in zip(row, v):
            if a and b:
                s = F.add(s, F.mul(a, b))
        out.append(s)
    return tuple(out)


def vec_add(F, u, v):
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_sub(F, u, v):
    return tuple(F.sub(a, b) for a, b in zip(u, v))


def vec_scale(F, v, c):
    return tuple(F.mul(a, c) for a in v)


def mat_pow(F, A, e):
    n = len(A)
    if e < 0:
        A = mat_inv(F, A)
        e = -e
    R = identity(n)
    while e:
        if e & 1:
            R = mat_mul(F, R, A)
        A = mat_mul(F, A, A)
        e >>= 1
    return R


def block_diag(*mats):
    n = sum(len(m) for m in mats)
    rows = []
    off = 0
    for m in mats:
        k = len(m)
        for r in m:
            rows.append(tuple([0] * off + list(r) + [0] * (n - off - k)))
        off += k
    return tuple(rows)


def rref(F, rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns); zero rows
    are dropped, so the result is a canonical basis of the row space."""
    rows = [list(r) for r in rows]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(x, inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r]), tuple(pivots)


def rank(F, A):
    return len(rref(F, A)[0])


def kernel_basis(F, A):
    """Canonical (RREF-derived) basis of {v : A v = 0}."""
    if not A:
        return ()
    n = len(A[0])
    R, pivots = rref(F, A)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R[i][fc])
        basis.append(tuple(v))
    return tuple(basis)


def det(F, A):
    A = [list(r) for r in A]
    n = len(A)
    d = 1
    sign_swaps = 0
    for c in range(n):
        piv = None
        for i in range(c, n):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign_swaps += 1
        d = F.mul(d, A[c][c])
        inv = F.inv(A[c][c])
        for i in range(c + 1, n):
            if A[i][c]:
                f = F.mul(A[i][c], inv)
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[c])]
    if sign_swaps % 2:
        d = F.neg(d)
    return d


def mat_inv(F, A):
    n = len(A)
    aug = [list(A[i]) + [1 if i == j else 0 for j in range(n)]
           for i in range(n)]
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, n):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = F.inv(aug[r][c])
        aug[r] = [F.mul(x, inv) for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [F.sub(x, F.mul(f, y))
                          for x, y in zip(aug[i], aug[r])]
        r += 1
    return tuple(tuple(row[n:]) for row in aug)


def solve_right(F, A, b):
    """One solution x of A x = b, or None."""
    if not A:
        return None
    n = len(A[0])
    aug = [list(row) + [bb] for row, bb in zip(A, b)]
    R, pivots = rref(F, aug)
    x = [0] * n
    for i, pc in enumerate(pivots):
        if pc == n:
            return None
        x[pc] = R[i][n]
    return tuple(x)


def charpoly(F, A):
    """det(x I - A) as a monic coefficient list (lowest degree first).

    Expansion by minors over column subsets; fine for the small dimensions
    used here and division-free, so it works over any field."""
    n = len(A)
    M = []
    for i in range(n):
        row = []
        for j in range(n):
            c = F.neg(A[i][j])
            row.append([c, 1] if i == j else ([c] if c else []))
        M.append(row)
    memo = {}

    def minor(r, mask):
        if r == n:
            return [1]
        key = mask
        if key in memo:
            return memo[key]
        acc = []
        sign_pos = 0
        m = mask
        while m:
            j = (m & -m).bit_length() - 1
            entry = M[r][j]
            if entry:
                sub = minor(r + 1, mask & ~(1 << j))
                term = F.pmul(entry, sub)
                if sign_pos % 2:
                    term = F.pscale(term, F.neg(1))
                acc = F.padd(acc, term)
            sign_pos += 1
            m &= m - 1
        memo[key] = acc
        return acc

    out = minor(0, (1 << n) - 1)
    if len(out) != n + 1 or out[-1] != 1:
        raise AssertionError("characteristic polynomial is not monic")
    return out


def eigenspace(F, A, lam):
    """Canonical basis of ker(A - lam I)."""
    n = len(A)
    B = tuple(tuple(F.sub(A[i][j], lam if i == j else 0) for j in range(n))
              for i in range(n))
    return kernel_basis(F, B)
