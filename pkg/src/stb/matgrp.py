"""Explicit matrix groups O(V), SO(V), Omega(V), Sp(V) at desk scale.

Groups are built from reflection/transvection generators, enumerated by BFS
closure into a packed-element set (see kernel), and every construction is
checked against the closed-form order.  Conjugacy classes, centralizers,
Jordan decomposition, spinor norm / Dickson invariant, and exact class
function inner products all live here.

Conventions:
  * q odd, dim odd: kinds O (index 2 over SO), SO, Omega (spinor kernel).
  * q odd, dim even, sign +-: same three kinds.
  * q even, dim even: O = SO (determinant is trivial); Omega = Dickson kernel.
  * q even, dim odd: the isometry group is isomorphic to Sp(dim-1, q); the
    group is constructed in its natural symplectic realization and tagged
    with the odd logical dimension.
"""

import os
import struct
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernel, linalg, quadspace
from .gf import field, field_of_order

DEFAULT_CAP = 2 * 10**7

_KIND_CODES = {"O": 0, "SO": 1, "Omega": 2, "Sp": 3}
_CACHE_MAGIC = b"STBG"
_CACHE_VERSION = 1


def bits_for(q):
    return max(1, (q - 1).bit_length())


def _sp_order(m, q):
    n = q ** (m * m)
    for i in range(1, m + 1):
        n *= q ** (2 * i) - 1
    return n


def _so_even_order(m, q, sign):
    n = q ** (m * (m - 1)) * (q ** m - sign)
    for i in range(1, m):
        n *= q ** (2 * i) - 1
    return n


def group_order(kind, dim, q, sign=1):
    """Closed-form order of the isometry-group kind on the standard space."""
    if dim == 0:
        return 1
    p = _smallest_prime_factor(q)
    even_char = p == 2
    if kind == "Sp":
        if dim % 2:
            raise ValueError("symplectic groups need even dimension")
        return _sp_order(dim // 2, q)
    if dim % 2:
        m = dim // 2
        base = _sp_order(m, q)
        if even_char:
            return base
        if kind == "O":
            return 2 * base
        if kind == "SO":
            return base
        if kind == "Omega":
            return base // 2 if dim >= 2 else 1
    else:
        m = dim // 2
        base = _so_even_order(m, q, sign)
        if even_char:
            if kind in ("O", "SO"):
                return 2 * base
            if kind == "Omega":
                return base
        else:
            if kind == "O":
                return 2 * base
            if kind == "SO":
                return base
            if kind == "Omega":
                return base // 2
    raise ValueError(f"unknown kind {kind}")


def _smallest_prime_factor(n):
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


# ---------------------------------------------------------------------------
# generation


def brute_isometries(space):
    """All isometries of a small space by column backtracking."""
    F = space.F
    n = space.dim
    vecs = [v for v in space.vectors() if any(v)]
    quad = isinstance(space, quadspace.QuadSpace)
    ebasis = [tuple(1 if t == i else 0 for t in range(n)) for i in range(n)]
    out = []
    cols = []

    def extend(j):
        if j == n:
            g = linalg.transpose(tuple(cols))
            if linalg.det(F, g) != 0:
                out.append(g)
            return
        for v in vecs:
            if quad and space.Q(v) != space.Q(ebasis[j]):
                continue
            ok = True
            for i in range(j):
                if space.B(cols[i], v) != space.B(ebasis[i], ebasis[j]):
                    ok = False
                    break
            if ok:
                cols.append(v)
                extend(j + 1)
                cols.pop()

    extend(0)
    return out


def _spread(items, count):
    if len(items) <= count:
        return list(items)
    step = len(items) / count
    picked = []
    for i in range(count):
        x = items[int(i * step)]
        if x not in picked:
            picked.append(x)
    return picked


def _orthogonal_candidates(space, kind):
    """Candidate generators whose full set provably generates the kind."""
    F = space.F
    vecs = [v for v in space.projective_vectors() if space.Q(v) != 0]
    if not vecs:
        return []
    refl = {v: space.reflection(v) for v in vecs}
    if kind == "O" or (kind == "SO" and F.p == 2):
        # det vanishes as a distinction in characteristic 2: SO is all of O
        cands = [refl[v] for v in vecs]
        if F.p == 2 and space.dim == 4 and space.type_sign() == 1:
            # transvections alone do not generate O4+(2); add the swap of
            # the two hyperbolic planes
            perm = (2, 3, 0, 1)
            swap = tuple(tuple(1 if perm[i] == j else 0 for j in range(4))
                         for i in range(4))
            if space.is_isometry(swap):
                cands.append(swap)
        return cands
    if F.p == 2:
        # Omega (= Dickson kernel, index 2 in O): products of two transvections
        base = vecs[0]
        cands = [linalg.mat_mul(F, refl[base], refl[v]) for v in vecs[1:]]
        if space.dim == 4 and space.type_sign() == 1:
            perm = (2, 3, 0, 1)
            swap = tuple(tuple(1 if perm[i] == j else 0 for j in range(4))
                         for i in range(4))
            cands.append(swap)  # rank(swap-1) = 2, Dickson 0
        return cands
    if kind == "SO":
        base = vecs[0]
        return [linalg.mat_mul(F, refl[base], refl[v]) for v in vecs[1:]]
    if kind == "Omega":
        sq = [v for v in vecs if F.is_square(space.Q(v))]
        nsq = [v for v in vecs if not F.is_square(space.Q(v))]
        cands = []
        if sq:
            b = sq[0]
            cands.extend(linalg.mat_mul(F, refl[b], refl[v]) for v in sq[1:])
        if nsq:
            b = nsq[0]
            cands.extend(linalg.mat_mul(F, refl[b], refl[v]) for v in nsq[1:])
        return cands
    raise ValueError(kind)


def _symplectic_candidates(space):
    return [space.transvection(v) for v in space.projective_vectors()]


def _closure_from_candidates(space, cands, expected, cap, nseed=6):
    """Close a spread of seed candidates, then augment with any candidate
    not yet in the set until the whole candidate pool is inside."""
    F = space.F
    n = space.dim
    bits = bits_for(F.q)
    codes = [kernel.pack(m, bits) for m in cands]
    gens = _spread(codes, nseed)
    S = kernel.closure(gens, n, F.p, bits, cap)
    while True:
        missing = [c for c in codes if not kernel.contains(S, c)]
        if not missing:
            break
        add = missing[:16]
        gens = gens + add
        S = kernel.closure(gens, n, F.p, bits, cap, seed=S)
    if S.size != expected:
        raise AssertionError(
            f"enumerated order {S.size} != closed form {expected}")
    return S, gens


@dataclass
class ConjClass:
    rep: tuple
    code: int
    size: int
    element_order: int
    is_semisimple: bool
    centralizer_order: int


class MatGroup:
    def __init__(self, F, space, kind, sign, gens_codes, packed,
                 logical_dim=None, cache_dir=None, cache_key=None):
        self.F = F
        self.space = space
        self.kind = kind
        self.sign = sign
        self.dim = space.dim
        self.logical_dim = logical_dim if logical_dim is not None else space.dim
        self.gens_codes = list(gens_codes)
        self._set = packed
        self.order = packed.size
        self.bits = bits_for(F.q)
        self.q = F.q
        self.p = F.p
        self._classes = None
        self._sorted_codes = None
        self._class_of = None
        self._inv_class = None
        self._cache_dir = cache_dir
        self._cache_key = cache_key

    def __repr__(self):
        return f"{self.name} order {self.order}"

    @property
    def name(self):
        t = ""
        if self.kind != "Sp" and self.logical_dim % 2 == 0:
            t = {1: "+", -1: "-"}.get(self.sign, "")
        return f"{self.kind}{self.logical_dim}{t}({self.q})"

    @property
    def is_symplectic_model(self):
        return isinstance(self.space, quadspace.SympSpace)

    # -- element plumbing ---------------------------------------------------

    def pack(self, mat):
        return kernel.pack(mat, self.bits)

    def unpack(self, code):
        return kernel.unpack(code, self.dim, self.bits)

    def contains_code(self, code):
        return kernel.contains(self._set, code)

    def contains(self, mat):
        return self.contains_code(self.pack(mat))

    def gens(self):
        return [self.unpack(c) for c in self.gens_codes]

    def codes_list(self):
        if self._sorted_codes is None:
            self._sorted_codes = kernel.codes_list(self._set)
        return self._sorted_codes

    def elements(self):
        for c in self.codes_list():
            yield self.unpack(c)

    def identity(self):
        return linalg.identity(self.dim)

    def mat_mul(self, a, b):
        return linalg.mat_mul(self.F, a, b)

    def mat_inv(self, a):
        return linalg.mat_inv(self.F, a)

    def element_order(self, mat):
        I = self.identity()
        x = mat
        k = 1
        while x != I:
            x = self.mat_mul(x, mat)
            k += 1
            if k > 100000:
                raise AssertionError("element order runaway")
        return k

    def det(self, mat):
        return linalg.det(self.F, mat)

    def fixed_space_basis(self, mat):
        n = self.dim
        A = tuple(tuple(self.F.sub(mat[i][j], 1 if i == j else 0)
                        for j in range(n)) for i in range(n))
        return linalg.kernel_basis(self.F, A)

    def is_semisimple(self, mat):
        return self.element_order(mat) % self.p != 0

    def jordan(self, mat):
        """(s, u) with g = su = us, s semisimple, u unipotent (p-power order)."""
        n = self.element_order(mat)
        a = 0
        pa = 1
        while n % self.p == 0:
            n //= self.p
            a += 1
            pa *= self.p
        m = n
        if a == 0:
            return mat, self.identity()
        if m == 1:
            return self.identity(), mat
        # e = 0 mod p^a, e = 1 mod m
        e = pa * pow(pa, -1, m)
        s = linalg.mat_pow(self.F, mat, e)
        u = self.mat_mul(mat, self.mat_inv(s))
        return s, u

    # -- conjugacy classes ----------------------------------------------------

    def conj_classes(self):
        if self._classes is None:
            self._load_or_compute_classes()
        return self._classes

    def _load_or_compute_classes(self):
        loaded = self._load_classes_cache()
        if loaded is not None:
            self._classes = loaded
            return
        raw = kernel.conj_classes(self._set, self.gens_codes, self.dim,
                                  self.p, self.bits)
        classes = []
        for code, size in raw:
            rep = self.unpack(code)
            ordr = self.element_order(rep)
            classes.append(ConjClass(
                rep=rep, code=code, size=size, element_order=ordr,
                is_semisimple=(ordr % self.p != 0),
                centralizer_order=self.order // size))
        if sum(c.size for c in classes) != self.order:
            raise AssertionError("class sizes do not sum to the group order")
        self._classes = classes
        self._save_classes_cache()

    def class_count(self):
        return len(self.conj_classes())

    def _ensure_class_map(self):
        """element code -> class index, built by conjugation orbits."""
        if self._class_of is not None:
            return
        classes = self.conj_classes()
        genmats = [(self.unpack(c), self.mat_inv(self.unpack(c)))
                   for c in self.gens_codes]
        cmap = {}
        for idx, cl in enumerate(classes):
            stack = [cl.rep]
            cmap[cl.code] = idx
            count = 1
            while stack:
                y = stack.pop()
                for gm, gim in genmats:
                    z = self.mat_mul(gim, self.mat_mul(y, gm))
                    zc = self.pack(z)
                    if zc not in cmap:
                        cmap[zc] = idx
                        count += 1
                        stack.append(z)
            if count != cl.size:
                raise AssertionError("class orbit size mismatch")
        self._class_of = cmap

    def class_index_of(self, mat):
        self._ensure_class_map()
        return self._class_of[self.pack(mat)]

    def class_index_of_code(self, code):
        self._ensure_class_map()
        return self._class_of[code]

    def inverse_class_table(self):
        """index i -> class index of rep_i^{-1}."""
        if self._inv_class is None:
            classes = self.conj_classes()
            self._ensure_class_map()
            self._inv_class = [
                self._class_of[self.pack(self.mat_inv(cl.rep))]
                for cl in classes]
        return self._inv_class

    def centralizer_order_of(self, mat):
        return kernel.centralizer_count(self._set, self.pack(mat), self.dim,
                                        self.p, self.bits)

    # -- class functions ------------------------------------------------------

    def inner_product(self, f1, f2, hermitian=False):
        """(1/|G|) sum size * f1(rep) * f2(rep^{-1}), exact.

        The default assumes f2 takes the same value on g and g^{-1}, true
        for any integer-valued virtual character; this avoids building the
        element-to-class map.  hermitian=True evaluates f2 at the inverse
        class literally (needs the class map, so enumerable-scale only)."""
        classes = self.conj_classes()
        total = 0
        if hermitian:
            inv = self.inverse_class_table()
            for i, cl in enumerate(classes):
                total += cl.size * f1[i] * f2[inv[i]]
        else:
            for i, cl in enumerate(classes):
                total += cl.size * f1[i] * f2[i]
        val = Fraction(total, self.order)
        return val

    def trivial_character(self):
        return [1] * len(self.conj_classes())

    # -- spinor norm / Dickson invariant --------------------------------------

    def _orthogonal_frame(self):
        """A fixed orthogonal anisotropic basis (q odd), built once."""
        if getattr(self, "_oframe", None) is not None:
            return self._oframe
        space = self.space
        F = self.F
        frame = []
        for v in space.projective_vectors():
            if space.Q(v) == 0:
                continue
            if any(space.B(v, z) != 0 for z in frame):
                continue
            rows = frame + [v]
            if linalg.rank(F, tuple(rows)) == len(rows):
                frame.append(v)
                if len(frame) == space.dim:
                    break
        if len(frame) != space.dim:
            raise AssertionError("no orthogonal anisotropic basis found")
        self._oframe = frame
        return frame

    def spinor_norm(self, mat):
        """+1 or -1; kernel of the restriction to SO is Omega (q odd).

        Greedy Cartan-Dieudonne against a fixed orthogonal anisotropic basis
        z_1..z_n: at step i the current h fixes z_1..z_{i-1}; w = h z_i - z_i
        is orthogonal to them, and if Q(w) = 0 then Q(h z_i + z_i) = 4 Q(z_i)
        is not, so at most two reflections fix z_i while keeping the earlier
        vectors fixed.  At most 2 dim reflections total."""
        if self.p == 2:
            raise ValueError("spinor norm needs q odd; use dickson")
        space = self.space
        F = self.F
        frame = self._orthogonal_frame()
        h = mat
        prod = 1
        for z in frame:
            hz = linalg.mat_vec(F, h, z)
            if hz == z:
                continue
            w = linalg.vec_sub(F, hz, z)
            if space.Q(w) != 0:
                r = space.reflection(w)
                prod = F.mul(prod, space.Q(w))
                h = self.mat_mul(r, h)
            else:
                w2 = linalg.vec_add(F, hz, z)
                qw2 = space.Q(w2)
                if qw2 == 0:
                    raise AssertionError("both difference and sum singular")
                r2 = space.reflection(w2)
                rz = space.reflection(z)
                prod = F.mul(prod, F.mul(qw2, space.Q(z)))
                h = self.mat_mul(rz, self.mat_mul(r2, h))
        if h != self.identity():
            raise AssertionError("reflection factorization did not terminate")
        return F.square_class(prod)

    def dickson(self, mat):
        """Dickson invariant in {0, 1} (q even): rank(g - 1) mod 2."""
        n = self.dim
        A = tuple(tuple(self.F.sub(mat[i][j], 1 if i == j else 0)
                        for j in range(n)) for i in range(n))
        return linalg.rank(self.F, A) % 2

    # -- cache ----------------------------------------------------------------

    def _cache_paths(self):
        if not self._cache_dir or not self._cache_key:
            return None, None
        base = os.path.join(self._cache_dir, self._cache_key)
        return base + ".stbgrp", base + ".stbcls"

    def _save_classes_cache(self):
        _, cls_path = self._cache_paths()
        if not cls_path:
            return
        os.makedirs(self._cache_dir, exist_ok=True)
        with open(cls_path, "w") as fh:
            fh.write("rep_encoding,size,order,semisimple,centralizer_order\n")
            for cl in self._classes:
                fh.write(f"{cl.code},{cl.size},{cl.element_order},"
                         f"{int(cl.is_semisimple)},{cl.centralizer_order}\n")

    def _load_classes_cache(self):
        _, cls_path = self._cache_paths()
        if not cls_path or not os.path.exists(cls_path):
            return None
        classes = []
        try:
            with open(cls_path) as fh:
                header = fh.readline()
                if not header.startswith("rep_encoding"):
                    raise ValueError("bad class cache header")
                for line in fh:
                    code_s, size_s, ord_s, ss_s, cent_s = line.strip().split(",")
                    code = int(code_s)
                    classes.append(ConjClass(
                        rep=self.unpack(code), code=code, size=int(size_s),
                        element_order=int(ord_s),
                        is_semisimple=bool(int(ss_s)),
                        centralizer_order=int(cent_s)))
        except (ValueError, OSError):
            import warnings
            warnings.warn(f"corrupt class cache {cls_path}; re-deriving")
            return None
        if sum(c.size for c in classes) != self.order:
            import warnings
            warnings.warn(f"stale class cache {cls_path}; re-deriving")
            return None
        return classes


# ---------------------------------------------------------------------------


def _form_hash(space):
    import hashlib
    if isinstance(space, quadspace.QuadSpace):
        data = repr(("Q", space.F.q, space.upper)).encode()
    else:
        data = repr(("S", space.F.q, space.J)).encode()
    return hashlib.blake2b(data, digest_size=8).hexdigest()


def _cache_key(kind, space, sign, logical_dim):
    tag = {1: "p", -1: "m"}.get(sign, "o")
    return f"{kind}_{logical_dim}{tag}_q{space.F.q}_{_form_hash(space)}"


def _save_group_cache(path, space, kind, sign, arr):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    F = space.F
    header = _CACHE_MAGIC + struct.pack(
        "<IHHHHhHQ", _CACHE_VERSION, F.p, F.k, space.dim,
        _KIND_CODES[kind], sign, 0, arr.shape[0])
    body = arr.astype("<u8").tobytes()
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(bytes.fromhex(_form_hash(space)))
        fh.write(body)


def _load_group_cache(path, space, kind, sign, expected):
    if not os.path.exists(path):
        return None
    try:
        with open(path, "rb") as fh:
            magic = fh.read(4)
            if magic != _CACHE_MAGIC:
                raise ValueError("bad magic")
            ver, p, k, dim, kc, sgn, _res, count = struct.unpack(
                "<IHHHHhHQ", fh.read(24))
            fhash = fh.read(8)
            if (ver != _CACHE_VERSION or p != space.F.p or k != space.F.k
                    or dim != space.dim or kc != _KIND_CODES[kind]
                    or sgn != sign or fhash.hex() != _form_hash(space)):
                raise ValueError("header mismatch")
            if count != expected:
                raise ValueError("count mismatch")
            body = fh.read(count * 16)
            # frombuffer over bytes is read-only; the kernel wants a
            # writable contiguous view, so copy
            arr = np.frombuffer(body, dtype="<u8").reshape(count, 2).copy()
    except (ValueError, OSError, struct.error):
        import warnings
        warnings.warn(f"corrupt group cache {path}; re-deriving")
        return None
    return kernel.from_array(np.ascontiguousarray(arr))


def build_group(kind, dim, q, sign=1, space=None, cap=DEFAULT_CAP,
                cache_dir=None):
    """Construct and fully enumerate the group; order is always asserted
    against the closed form."""
    if kind not in ("O", "SO", "Omega", "Sp"):
        raise ValueError(f"unknown kind {kind}")
    F = field_of_order(q)
    if F.k != 1:
        raise ValueError("enumeration supports prime fields only")
    p = F.p
    logical_dim = dim
    if kind == "Sp":
        if space is None:
            space = quadspace.symplectic_space(F, dim)
        expected = group_order("Sp", dim, q)
    elif p == 2 and dim % 2 == 1:
        # odd-dimensional orthogonal group in even characteristic: build the
        # isomorphic symplectic group on dim-1 coordinates
        if space is None:
            space = quadspace.symplectic_space(F, dim - 1)
        expected = group_order(kind, dim, q)
    else:
        if space is None:
            space = quadspace.standard_space(F, dim, sign)
        if dim % 2 == 0:
            actual_sign = space.type_sign()
            if sign not in (1, -1) or actual_sign != sign:
                sign = actual_sign
        expected = group_order(kind, dim, q, sign)

    bits = bits_for(q)
    kernel.check_shape(space.dim, p, bits)
    if expected > cap:
        raise RuntimeError(
            f"|{kind}_{dim}({q})| = {expected} exceeds cap {cap}")

    key = _cache_key(kind, space, sign if dim % 2 == 0 else 0, logical_dim)
    grp_path = None
    if cache_dir:
        grp_path = os.path.join(cache_dir, key + ".stbgrp")

    symplectic = isinstance(space, quadspace.SympSpace)

    # generators (needed even on cache hit, for class computations)
    if space.dim == 0:
        raise ValueError("empty space")
    small_brute = (space.dim <= 2) or (q == 2 and space.dim <= 4)
    if small_brute:
        all_isos = brute_isometries(space)
        mats = _filter_kind(all_isos, space, kind, F)
        codes = [kernel.pack(m, bits) for m in mats]
        S = kernel.PackedSet()
        for c in codes:
            kernel.insert(S, c)
        ident = kernel.pack(linalg.identity(space.dim), bits)
        kernel.insert(S, ident)
        if S.size != expected:
            raise AssertionError(
                f"brute force found {S.size}, closed form {expected}")
        gens = codes if codes else [ident]
        G = MatGroup(F, space, kind, sign, gens, S,
                     logical_dim=logical_dim, cache_dir=cache_dir,
                     cache_key=key)
        return G

    if symplectic:
        cands = _symplectic_candidates(space)
    else:
        cands = _orthogonal_candidates(space, kind)
    cached = None
    if grp_path:
        cached = _load_group_cache(grp_path, space,
                                   kind, sign if dim % 2 == 0 else 0, expected)
    if cached is not None:
        S = cached
        gens = _spread([kernel.pack(m, bits) for m in cands], 6)
        missing = [c for c in gens if not kernel.contains(S, c)]
        if missing:
            import warnings
            warnings.warn(f"stale group cache {grp_path}; re-deriving")
            cached = None
    if cached is None:
        S, gens = _closure_from_candidates(space, cands, expected, cap)
        if grp_path:
            _save_group_cache(grp_path, space, kind,
                              sign if dim % 2 == 0 else 0, kernel.export_array(S))
    G = MatGroup(F, space, kind, sign, gens, S, logical_dim=logical_dim,
                 cache_dir=cache_dir, cache_key=key)
    return G


def _filter_kind(all_isos, space, kind, F):
    if isinstance(space, quadspace.SympSpace) or kind == "Sp":
        return all_isos
    if F.p == 2:
        if kind in ("O", "SO"):
            return all_isos
        # Omega: Dickson invariant 0
        out = []
        n = space.dim
        for g in all_isos:
            A = tuple(tuple(F.sub(g[i][j], 1 if i == j else 0)
                            for j in range(n)) for i in range(n))
            if linalg.rank(F, A) % 2 == 0:
                out.append(g)
        return out
    if kind == "O":
        return all_isos
    so = [g for g in all_isos if linalg.det(F, g) == 1]
    if kind == "SO":
        return so
    # Omega: need spinor norms; build a throwaway group-like evaluation
    tmp = _SpinorHelper(F, space)
    return [g for g in so if tmp.spinor_norm(g) == 1]


class _SpinorHelper:
    def __init__(self, F, space):
        self.F = F
        self.space = space
        self.dim = space.dim
        self._oframe = None

    identity = MatGroup.identity
    mat_mul = MatGroup.mat_mul
    _orthogonal_frame = MatGroup._orthogonal_frame
    spinor_norm = MatGroup.spinor_norm
    p = property(lambda self: self.F.p)


# ---------------------------------------------------------------------------
# embeddings


def codim1_extension(space, a=1):
    """The space V ⊥ <a> together with the map g -> diag(g, 1)."""
    F = space.F
    ext = quadspace.direct_sum(space, quadspace.line_space(F, a % F.q))

    def embed(g):
        n = space.dim
        return tuple(
            tuple((g[i][j] if i < n and j < n else (1 if i == j else 0))
                  for j in range(n + 1))
            for i in range(n + 1))

    return ext, embed


def embed_gl(n, q):
    """GL_n(q) -> SO+_{2n}(q) on the standard plus space (interleaved
    hyperbolic pairs): g acts on the e-coordinates, transpose-inverse on
    the f-coordinates.  Returns (space, embed, gl_elements)."""
    F = field(q)
    space = quadspace.standard_space(F, 2 * n, 1)

    def embed(g):
        ginvt = linalg.transpose(linalg.mat_inv(F, g))
        M = [[0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                M[2 * i][2 * j] = g[i][j]
                M[2 * i + 1][2 * j + 1] = ginvt[i][j]
        M = tuple(tuple(r) for r in M)
        if not space.is_isometry(M):
            raise AssertionError("GL embedding broke the form")
        return M

    import itertools
    gl = []
    for entries in itertools.product(range(q), repeat=n * n):
        g = tuple(tuple(entries[i * n + j] for j in range(n))
                  for i in range(n))
        if linalg.det(F, g) != 0:
            gl.append(g)
    return space, embed, gl


def embed_unitary(n, q):
    """U_n(q) (unitary group of the standard Hermitian form over GF(q^2))
    into O(V) for the 2n-dimensional GF(q)-space with Q(w) = H(w, w).

    Returns (space, embed, unitary_elements, F2) where unitary elements are
    n x n matrices over GF(q^2) and F2 is that field."""
    F = field(q)
    p, k = F.p, F.k
    F2 = field(p, 2 * k)
    beta = None
    for x in F2.elements():
        if x > 0 and F2.frobenius(x, k) != x:
            beta = x
            break
    # basis {1, beta} of GF(q^2) over GF(q); N and Tr relative to GF(q)
    tr_b = F2.trace(beta, k)
    n_b = F2.norm(beta, k)
    # GF(q) sits inside F2 with the same small encodings (digit embedding)
    blockU = ((1, tr_b), (0, n_b))
    space = quadspace.QuadSpace(
        F, linalg.block_diag(*([blockU] * n)))

    def to_pair(c):
        """c in GF(q^2) as (a, b) with c = a + b*beta over GF(q)."""
        for a in range(q):
            for b in range(q):
                if F2.add(a, F2.mul(b, beta)) == c:
                    return (a, b)
        raise AssertionError

    pair_cache = {c: to_pair(c) for c in F2.elements()}

    def mult_block(c):
        a1, b1 = pair_cache[F2.mul(c, 1)]
        a2, b2 = pair_cache[F2.mul(c, beta)]
        return ((a1, a2), (b1, b2))

    def embed(g):
        M = [[0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                blk = mult_block(g[i][j])
                for r in range(2):
                    for c in range(2):
                        M[2 * i + r][2 * j + c] = blk[r][c]
        M = tuple(tuple(r) for r in M)
        if not space.is_isometry(M):
            raise AssertionError("unitary embedding broke the form")
        return M

    import itertools
    conj = lambda c: F2.frobenius(c, k)
    unitary = []
    for entries in itertools.product(range(q * q), repeat=n * n):
        g = tuple(tuple(entries[i * n + j] for j in range(n))
                  for i in range(n))
        # H(gu, gv) = H(u, v) with H(u, v) = sum u_i conj(v_i):
        # conj(g)^T g = I
        ok = True
        for i in range(n):
            for j in range(n):
                s = 0
                for t in range(n):
                    s = F2.add(s, F2.mul(conj(g[t][i]), g[t][j]))
                if s != (1 if i == j else 0):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            unitary.append(g)
    return space, embed, unitary, F2


def symplectic_point_stabilizer(H, sp_dim):
    """For q even: an isomorphism Sp_{sp_dim}(q) -> Stab_H(v) <= H, where H
    is an even-dimensional Omega group and v is the first nonsingular vector.

    Returns (v, iso) with iso a dict from symplectic-group matrices to
    H-matrices."""
    space = H.space
    F = H.F
    if F.p != 2:
        raise ValueError("stabilizer model is an even-characteristic device")
    v = next(w for w in space.projective_vectors() if space.Q(w) != 0)
    n = space.dim
    # v^perp contains v (alternating form); build a symplectic basis of
    # v^perp / <v> lifted to vectors u_1..u_{sp_dim}
    rows = tuple(tuple(space.B(tuple(1 if t == i else 0 for t in range(n)), v)
                       for i in range(n)) for _ in range(1))
    perp = linalg.kernel_basis(F, rows)
    # quotient basis: drop v from the span
    quo = []
    for w in perp:
        cand = quo + [w]
        if linalg.rank(F, tuple(cand + [v])) == len(cand) + 1:
            quo.append(w)
    if len(quo) != sp_dim:
        raise AssertionError("quotient dimension mismatch")
    # symplectic Gram on the quotient, then convert to the standard
    # interleaved basis by greedy pairing
    basis = []
    pool = list(quo)
    while pool:
        e = pool.pop(0)
        f = None
        for w in pool:
            if space.B(e, w) != 0:
                f = w
                break
        if f is None:
            raise AssertionError("degenerate quotient pairing")
        pool.remove(f)
        c = F.inv(space.B(e, f))
        f = linalg.vec_scale(F, f, c)
        # clean the rest of the pool against this pair
        newpool = []
        for w in pool:
            w1 = linalg.vec_sub(F, w, linalg.vec_scale(F, e, space.B(f, w)))
            w1 = linalg.vec_sub(F, w1, linalg.vec_scale(F, f, space.B(w1, e)))
            # ensure still independent modulo <v, basis...>
            newpool.append(w1)
        pool = newpool
        basis.extend([e, f])
    # matrix whose columns are u_1..u_{sp_dim} and v
    cols = basis + [v]
    Mcols = linalg.transpose(tuple(cols))
    iso = {}
    target = quadspace.symplectic_space(F, sp_dim)
    for h in H.elements():
        hv = linalg.mat_vec(F, h, v)
        if hv != v:
            continue
        # express h(u_j) in the basis (u_1..u_k, v)
        cols_im = []
        for u in basis:
            hu = linalg.mat_vec(F, h, u)
            sol = linalg.solve_right(F, Mcols, hu)
            if sol is None:
                raise AssertionError("stabilizer image not in span")
            cols_im.append(sol[:sp_dim])
        g = linalg.transpose(tuple(cols_im))
        if not target.is_isometry(g):
            raise AssertionError("quotient action is not symplectic")
        iso[g] = h
    return v, iso
