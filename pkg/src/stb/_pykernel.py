"""Pure-Python enumeration kernel.

Same interface as the compiled kernel in _speedups.pyx: matrices over a prime
field GF(p) are bit-packed row-major into a single integer code, with
ceil(log2 q) bits per entry, entry (r, c) at bit (r*n + c)*bits.  Codes fit
in 128 bits (enforced).  Only prime fields are supported here; extension
field work happens before packing.
"""

import numpy as np

name = "python"

_MASK64 = (1 << 64) - 1


def check_shape(n, p, bits):
    if p < 2:
        raise ValueError("p must be at least 2")
    if (1 << bits) < p:
        raise ValueError("bits too small for p")
    if n * n * bits > 128:
        raise ValueError(
            f"cannot pack a {n}x{n} matrix over GF({p}) into 128 bits")


def pack(rows, bits):
    code = 0
    idx = 0
    for row in rows:
        for v in row:
            code |= v << (idx * bits)
            idx += 1
    return code


def unpack(code, n, bits):
    mask = (1 << bits) - 1
    return tuple(tuple((code >> ((r * n + c) * bits)) & mask
                       for c in range(n))
                 for r in range(n))


def _mul(a, b, n, p):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p
                       for j in range(n))
                 for i in range(n))


def _inv(a, n, p):
    aug = [list(a[i]) + [1 if i == j else 0 for j in range(n)]
           for i in range(n)]
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, n):
            if aug[i][c] % p:
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(x * inv) % p for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        r += 1
    return tuple(tuple(row[n:]) for row in aug)


class PackedSet:
    __slots__ = ("codes",)

    def __init__(self):
        self.codes = set()

    @property
    def size(self):
        return len(self.codes)


def contains(S, code):
    return code in S.codes


def insert(S, code):
    before = len(S.codes)
    S.codes.add(code)
    return len(S.codes) != before


def closure(gens, n, p, bits, cap, seed=None):
    """BFS closure of <seed ∪ gens> under right multiplication by gens."""
    check_shape(n, p, bits)
    S = seed if seed is not None else PackedSet()
    ident = pack(tuple(tuple(1 if i == j else 0 for j in range(n))
                       for i in range(n)), bits)
    S.codes.add(ident)
    genmats = []
    for g in gens:
        S.codes.add(g)
        genmats.append(unpack(g, n, bits))
    frontier = list(S.codes)
    while frontier:
        new = []
        for x in frontier:
            xm = unpack(x, n, bits)
            for gm in genmats:
                y = pack(_mul(xm, gm, n, p), bits)
                if y not in S.codes:
                    S.codes.add(y)
                    if len(S.codes) > cap:
                        raise RuntimeError(
                            f"group enumeration exceeded cap {cap}")
                    new.append(y)
        frontier = new
    return S


def conj_classes(S, gens, n, p, bits):
    """Conjugacy classes of the group stored in S, generators gens.

    Iterates elements in ascending code order; each class representative is
    therefore the minimal code in its class.  Returns [(rep_code, size)]."""
    genmats = []
    for g in gens:
        gm = unpack(g, n, bits)
        genmats.append((gm, _inv(gm, n, p)))
    visited = set()
    out = []
    for c in sorted(S.codes):
        if c in visited:
            continue
        visited.add(c)
        stack = [c]
        size = 0
        while stack:
            y = stack.pop()
            size += 1
            ym = unpack(y, n, bits)
            for gm, gim in genmats:
                z = pack(_mul(gim, _mul(ym, gm, n, p), n, p), bits)
                if z not in visited:
                    visited.add(z)
                    stack.append(z)
        out.append((c, size))
    return out


def centralizer_count(S, code, n, p, bits):
    xm = unpack(code, n, bits)
    count = 0
    for y in S.codes:
        ym = unpack(y, n, bits)
        if _mul(ym, xm, n, p) == _mul(xm, ym, n, p):
            count += 1
    return count


def export_array(S):
    """Sorted (N, 2) uint64 array of (lo, hi) words, ascending as 128-bit."""
    codes = sorted(S.codes)
    arr = np.empty((len(codes), 2), dtype=np.uint64)
    for i, c in enumerate(codes):
        arr[i, 0] = c & _MASK64
        arr[i, 1] = c >> 64
    return arr


def from_array(arr):
    S = PackedSet()
    lo = arr[:, 0].tolist()
    hi = arr[:, 1].tolist()
    S.codes = {l | (h << 64) for l, h in zip(lo, hi)}
    return S


def codes_list(S):
    return sorted(S.codes)
