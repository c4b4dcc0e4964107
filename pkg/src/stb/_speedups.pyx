# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Matrices over a prime field GF(p) are bit-packed row-major into 128 bits
held as two 64-bit words (lo, hi); entry (r, c) sits at bit (r*n + c)*bits,
bits = ceil(log2 q).  Python-facing codes are arbitrary-precision ints
lo | hi << 64, identical to the pure-Python kernel's packing.

The hash set uses open addressing with linear probing; the all-zero word
pair is the empty slot sentinel, which is safe because group elements are
invertible and the zero matrix never appears.
"""

import numpy as np

from libc.stdint cimport uint8_t, uint32_t, uint64_t
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcmp, memset

name = "cython"

_MASK64 = (1 << 64) - 1

DEF MAXN = 12
DEF MAXE = 144  # MAXN * MAXN


def check_shape(int n, int p, int bits):
    if p < 2:
        raise ValueError("p must be at least 2")
    if (1 << bits) < p:
        raise ValueError("bits too small for p")
    if n * n * bits > 128 or n > MAXN:
        raise ValueError(
            "cannot pack a %dx%d matrix over GF(%d) into 128 bits" % (n, n, p))


def pack(rows, int bits):
    code = 0
    idx = 0
    for row in rows:
        for v in row:
            code |= v << (idx * bits)
            idx += 1
    return code


def unpack(code, int n, int bits):
    mask = (1 << bits) - 1
    return tuple(tuple((code >> ((r * n + c) * bits)) & mask
                       for c in range(n))
                 for r in range(n))


# -- C-level packing -----------------------------------------------------

cdef inline void c_unpack(uint64_t lo, uint64_t hi, int n2, int bits,
                          uint8_t * out) noexcept:
    cdef int idx, off
    cdef uint64_t mask = (<uint64_t> 1 << bits) - 1
    for idx in range(n2):
        off = idx * bits
        if off >= 64:
            out[idx] = <uint8_t> ((hi >> (off - 64)) & mask)
        elif off + bits <= 64:
            out[idx] = <uint8_t> ((lo >> off) & mask)
        else:
            out[idx] = <uint8_t> (((lo >> off) | (hi << (64 - off))) & mask)


cdef inline void c_pack(const uint8_t * m, int n2, int bits,
                        uint64_t * lo, uint64_t * hi) noexcept:
    cdef int idx, off
    cdef uint64_t l = 0, h = 0, v
    for idx in range(n2):
        v = m[idx]
        off = idx * bits
        if off >= 64:
            h |= v << (off - 64)
        elif off + bits <= 64:
            l |= v << off
        else:
            l |= v << off
            h |= v >> (64 - off)
    lo[0] = l
    hi[0] = h


cdef inline void c_matmul(const uint8_t * a, const uint8_t * b, uint8_t * out,
                          int n, int p) noexcept:
    cdef int i, j, k
    cdef uint32_t acc
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc += (<uint32_t> a[i * n + k]) * b[k * n + j]
            out[i * n + j] = <uint8_t> (acc % <uint32_t> p)


cdef inline uint64_t mix(uint64_t lo, uint64_t hi) noexcept:
    cdef uint64_t h = lo * <uint64_t> 0x9E3779B97F4A7C15ULL
    h ^= h >> 32
    h += hi * <uint64_t> 0xC2B2AE3D27D4EB4FULL
    h ^= h >> 29
    h *= <uint64_t> 0xBF58476D1CE4E5B9ULL
    h ^= h >> 32
    return h


cdef class PackedSet:
    cdef uint64_t * klo
    cdef uint64_t * khi
    cdef Py_ssize_t cap
    cdef Py_ssize_t n_items

    def __cinit__(self):
        self.cap = 1 << 10
        self.n_items = 0
        self.klo = <uint64_t *> malloc(self.cap * sizeof(uint64_t))
        self.khi = <uint64_t *> malloc(self.cap * sizeof(uint64_t))
        if self.klo == NULL or self.khi == NULL:
            raise MemoryError()
        memset(self.klo, 0, self.cap * sizeof(uint64_t))
        memset(self.khi, 0, self.cap * sizeof(uint64_t))

    def __dealloc__(self):
        if self.klo != NULL:
            free(self.klo)
        if self.khi != NULL:
            free(self.khi)

    @property
    def size(self):
        return self.n_items

    cdef Py_ssize_t _slot(self, uint64_t lo, uint64_t hi) noexcept:
        """Slot holding (lo, hi), or the empty slot where it would go."""
        cdef uint64_t mask = <uint64_t> (self.cap - 1)
        cdef Py_ssize_t s = <Py_ssize_t> (mix(lo, hi) & mask)
        while True:
            if self.klo[s] == 0 and self.khi[s] == 0:
                return s
            if self.klo[s] == lo and self.khi[s] == hi:
                return s
            s = <Py_ssize_t> ((<uint64_t> s + 1) & mask)

    cdef int _insert(self, uint64_t lo, uint64_t hi) except -1:
        """1 if newly inserted, 0 if already present."""
        cdef Py_ssize_t s = self._slot(lo, hi)
        if self.klo[s] == lo and self.khi[s] == hi and not (lo == 0 and hi == 0):
            return 0
        self.klo[s] = lo
        self.khi[s] = hi
        self.n_items += 1
        if self.n_items * 2 >= self.cap:
            self._grow()
        return 1

    cdef int _grow(self) except -1:
        cdef uint64_t * olo = self.klo
        cdef uint64_t * ohi = self.khi
        cdef Py_ssize_t ocap = self.cap
        cdef Py_ssize_t ncap = ocap * 2
        cdef uint64_t * nlo = <uint64_t *> malloc(ncap * sizeof(uint64_t))
        cdef uint64_t * nhi = <uint64_t *> malloc(ncap * sizeof(uint64_t))
        cdef Py_ssize_t i, s
        cdef uint64_t mask = <uint64_t> (ncap - 1)
        if nlo == NULL or nhi == NULL:
            if nlo != NULL:
                free(nlo)
            if nhi != NULL:
                free(nhi)
            raise MemoryError()
        memset(nlo, 0, ncap * sizeof(uint64_t))
        memset(nhi, 0, ncap * sizeof(uint64_t))
        for i in range(ocap):
            if olo[i] == 0 and ohi[i] == 0:
                continue
            s = <Py_ssize_t> (mix(olo[i], ohi[i]) & mask)
            while not (nlo[s] == 0 and nhi[s] == 0):
                s = <Py_ssize_t> ((<uint64_t> s + 1) & mask)
            nlo[s] = olo[i]
            nhi[s] = ohi[i]
        self.klo = nlo
        self.khi = nhi
        self.cap = ncap
        free(olo)
        free(ohi)
        return 0

    cdef bint _has(self, uint64_t lo, uint64_t hi) noexcept:
        cdef Py_ssize_t s = self._slot(lo, hi)
        return self.klo[s] == lo and self.khi[s] == hi and not (lo == 0 and hi == 0)


def contains(PackedSet S, code):
    cdef uint64_t lo = <uint64_t> (code & _MASK64)
    cdef uint64_t hi = <uint64_t> (code >> 64)
    return bool(S._has(lo, hi))


def insert(PackedSet S, code):
    cdef uint64_t lo = <uint64_t> (code & _MASK64)
    cdef uint64_t hi = <uint64_t> (code >> 64)
    return bool(S._insert(lo, hi))


cdef struct Frontier:
    uint64_t * lo
    uint64_t * hi
    Py_ssize_t count
    Py_ssize_t cap


cdef int frontier_push(Frontier * f, uint64_t lo, uint64_t hi) except -1:
    cdef uint64_t * nl
    cdef uint64_t * nh
    if f.count == f.cap:
        f.cap = f.cap * 2 if f.cap else 1024
        nl = <uint64_t *> realloc(f.lo, f.cap * sizeof(uint64_t))
        nh = <uint64_t *> realloc(f.hi, f.cap * sizeof(uint64_t))
        if nl == NULL or nh == NULL:
            raise MemoryError()
        f.lo = nl
        f.hi = nh
    f.lo[f.count] = lo
    f.hi[f.count] = hi
    f.count += 1
    return 0


def closure(gens, int n, int p, int bits, long long cap, PackedSet seed=None):
    """BFS closure of <seed ∪ gens> under right multiplication by gens."""
    check_shape(n, p, bits)
    cdef PackedSet S = seed if seed is not None else PackedSet()
    cdef int n2 = n * n
    cdef int ngens = len(gens)
    cdef uint8_t * genm = <uint8_t *> malloc(ngens * MAXE * sizeof(uint8_t))
    cdef Frontier cur, nxt, tmp
    cdef Py_ssize_t i, gi
    cdef uint64_t lo, hi, ylo, yhi
    cdef uint8_t xm[MAXE]
    cdef uint8_t ym[MAXE]
    cdef object code
    if genm == NULL:
        raise MemoryError()
    cur.lo = NULL; cur.hi = NULL; cur.count = 0; cur.cap = 0
    nxt.lo = NULL; nxt.hi = NULL; nxt.count = 0; nxt.cap = 0
    try:
        ident = pack(tuple(tuple(1 if a == b else 0 for b in range(n))
                           for a in range(n)), bits)
        S._insert(<uint64_t> (ident & _MASK64), <uint64_t> (ident >> 64))
        for gi in range(ngens):
            code = gens[gi]
            lo = <uint64_t> (code & _MASK64)
            hi = <uint64_t> (code >> 64)
            c_unpack(lo, hi, n2, bits, &genm[gi * MAXE])
            S._insert(lo, hi)
        # start from everything currently in the set
        for i in range(S.cap):
            if S.klo[i] == 0 and S.khi[i] == 0:
                continue
            frontier_push(&cur, S.klo[i], S.khi[i])
        while cur.count:
            nxt.count = 0
            for i in range(cur.count):
                c_unpack(cur.lo[i], cur.hi[i], n2, bits, xm)
                for gi in range(ngens):
                    c_matmul(xm, &genm[gi * MAXE], ym, n, p)
                    c_pack(ym, n2, bits, &ylo, &yhi)
                    if S._insert(ylo, yhi):
                        if S.n_items > cap:
                            raise RuntimeError(
                                "group enumeration exceeded cap %d" % cap)
                        frontier_push(&nxt, ylo, yhi)
            tmp = cur
            cur = nxt
            nxt = tmp
        return S
    finally:
        free(genm)
        if cur.lo != NULL:
            free(cur.lo)
        if cur.hi != NULL:
            free(cur.hi)
        if nxt.lo != NULL:
            free(nxt.lo)
        if nxt.hi != NULL:
            free(nxt.hi)


def conj_classes(PackedSet S, gens, int n, int p, int bits):
    """[(rep_code, size)] for the group in S; reps are class-minimal codes."""
    cdef int n2 = n * n
    cdef int ngens = len(gens)
    cdef uint8_t * genm = <uint8_t *> malloc(ngens * MAXE * sizeof(uint8_t))
    cdef uint8_t * genim = <uint8_t *> malloc(ngens * MAXE * sizeof(uint8_t))
    cdef uint8_t * visited = NULL
    cdef Frontier stack
    cdef Py_ssize_t i, s, gi, size
    cdef uint64_t lo, hi, zlo, zhi
    cdef uint8_t ym[MAXE]
    cdef uint8_t t1[MAXE]
    cdef uint8_t t2[MAXE]
    if genm == NULL or genim == NULL:
        if genm != NULL:
            free(genm)
        if genim != NULL:
            free(genim)
        raise MemoryError()
    stack.lo = NULL; stack.hi = NULL; stack.count = 0; stack.cap = 0
    out = []
    try:
        from . import _pykernel
        arr = export_array(S)
        for gi in range(ngens):
            gmat = unpack(gens[gi], n, bits)
            gimat = _pykernel._inv(gmat, n, p)
            flat = [x for row in gmat for x in row]
            iflat = [x for row in gimat for x in row]
            for i in range(n2):
                genm[gi * MAXE + i] = <uint8_t> flat[i]
                genim[gi * MAXE + i] = <uint8_t> iflat[i]
        visited = <uint8_t *> malloc(S.cap * sizeof(uint8_t))
        if visited == NULL:
            raise MemoryError()
        memset(visited, 0, S.cap * sizeof(uint8_t))
        view = arr
        for idx in range(arr.shape[0]):
            lo = <uint64_t> int(view[idx, 0])
            hi = <uint64_t> int(view[idx, 1])
            s = S._slot(lo, hi)
            if visited[s]:
                continue
            visited[s] = 1
            stack.count = 0
            frontier_push(&stack, lo, hi)
            size = 0
            while stack.count:
                stack.count -= 1
                zlo = stack.lo[stack.count]
                zhi = stack.hi[stack.count]
                size += 1
                c_unpack(zlo, zhi, n2, bits, ym)
                for gi in range(ngens):
                    c_matmul(&genim[gi * MAXE], ym, t1, n, p)
                    c_matmul(t1, &genm[gi * MAXE], t2, n, p)
                    c_pack(t2, n2, bits, &zlo, &zhi)
                    s = S._slot(zlo, zhi)
                    if not visited[s]:
                        if not (S.klo[s] == zlo and S.khi[s] == zhi):
                            raise RuntimeError("conjugate escaped the set")
                        visited[s] = 1
                        frontier_push(&stack, zlo, zhi)
            rep = int(lo) | (int(hi) << 64)
            out.append((rep, size))
        return out
    finally:
        free(genm)
        free(genim)
        if visited != NULL:
            free(visited)
        if stack.lo != NULL:
            free(stack.lo)
        if stack.hi != NULL:
            free(stack.hi)


def centralizer_count(PackedSet S, code, int n, int p, int bits):
    cdef int n2 = n * n
    cdef uint8_t xm[MAXE]
    cdef uint8_t ym[MAXE]
    cdef uint8_t t1[MAXE]
    cdef uint8_t t2[MAXE]
    cdef Py_ssize_t i, count = 0
    cdef uint64_t lo = <uint64_t> (code & _MASK64)
    cdef uint64_t hi = <uint64_t> (code >> 64)
    c_unpack(lo, hi, n2, bits, xm)
    for i in range(S.cap):
        if S.klo[i] == 0 and S.khi[i] == 0:
            continue
        c_unpack(S.klo[i], S.khi[i], n2, bits, ym)
        c_matmul(ym, xm, t1, n, p)
        c_matmul(xm, ym, t2, n, p)
        if memcmp(t1, t2, n2) == 0:
            count += 1
    return count


def export_array(PackedSet S):
    """Sorted (N, 2) uint64 array of (lo, hi) words, ascending as 128-bit."""
    arr = np.empty((S.n_items, 2), dtype=np.uint64)
    cdef uint64_t[:, ::1] view = arr
    cdef Py_ssize_t i, j = 0
    for i in range(S.cap):
        if S.klo[i] == 0 and S.khi[i] == 0:
            continue
        view[j, 0] = S.klo[i]
        view[j, 1] = S.khi[i]
        j += 1
    order = np.lexsort((arr[:, 0], arr[:, 1]))
    return np.ascontiguousarray(arr[order])


def from_array(arr):
    cdef PackedSet S = PackedSet()
    a = np.ascontiguousarray(arr, dtype=np.uint64)
    cdef uint64_t[:, ::1] view = a
    cdef Py_ssize_t i
    for i in range(view.shape[0]):
        S._insert(view[i, 0], view[i, 1])
    return S


def codes_list(PackedSet S):
    arr = export_array(S)
    lo = arr[:, 0].tolist()
    hi = arr[:, 1].tolist()
    return [l | (h << 64) for l, h in zip(lo, hi)]
