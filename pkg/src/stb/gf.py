"""Finite fields GF(p^k) with exact integer arithmetic.

Elements are encoded as integers in [0, p^k): the element sum c_i * alpha^i
has encoding sum c_i * p^i, where alpha is the class of x modulo the field's
defining polynomial.  The defining polynomial is chosen deterministically as
the lexicographically smallest monic irreducible of degree k (smallest integer
encoding of its non-leading coefficients), so encodings are stable across runs
and processes.

Multiplication in extension fields goes through discrete exp/log tables built
once per field; prime fields use plain modular arithmetic.
"""

import math
from functools import lru_cache


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over GF(p) as coefficient lists (lowest degree first), used only
# to bootstrap the field tables

def _pp_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pp_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pp_trim(out)


def _pp_mod(f, m, p):
    f = f[:]
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(f) - 1 >= dm and _pp_trim(f):
        df = len(f) - 1
        c = (f[-1] * inv_lead) % p
        shift = df - dm
        for i, b in enumerate(m):
            f[shift + i] = (f[shift + i] - c * b) % p
        _pp_trim(f)
    return f


def _pp_powmod(f, e, m, p):
    result = [1]
    base = _pp_mod(f, m, p)
    while e:
        if e & 1:
            result = _pp_mod(_pp_mul(result, base, p), m, p)
        base = _pp_mod(_pp_mul(base, base, p), m, p)
        e >>= 1
    return result


def _pp_gcd(f, g, p):
    f, g = f[:], g[:]
    while _pp_trim(g):
        f, g = g, _pp_mod(f, g, p)
    return f


def _pp_is_irreducible(f, p):
    """Deterministic irreducibility test for monic f over GF(p)."""
    k = len(f) - 1
    if k < 1:
        return False
    x = [0, 1]
    xq = _pp_powmod(x, p ** k, f, p)
    diff = _pp_trim([(a - b) % p for a, b in
                     zip(xq + [0] * len(x), x + [0] * len(xq))])
    if diff:
        return False
    for r in _prime_factors(k):
        xqr = _pp_powmod(x, p ** (k // r), f, p)
        diff = _pp_trim([(a - b) % p for a, b in
                         zip(xqr + [0] * len(x), x + [0] * len(xqr))])
        g = _pp_gcd(f[:], diff, p)
        if len(g) - 1 >= 1:
            return False
    return True


def _smallest_irreducible(p, k):
    """Monic irreducible x^k + c_{k-1} x^{k-1} + ... + c_0 with smallest
    integer encoding sum c_i p^i."""
    for enc in range(p ** k):
        coeffs = []
        e = enc
        for _ in range(k):
            coeffs.append(e % p)
            e //= p
        f = coeffs + [1]
        if _pp_is_irreducible(f, p):
            return f
    raise ArithmeticError(f"no irreducible of degree {k} over GF({p})")


# ---------------------------------------------------------------------------


class GF:
    """The field GF(p^k), elements encoded as integers in [0, p^k)."""

    def __init__(self, p, k=1):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if k < 1:
            raise ValueError("k must be >= 1")
        self.p = p
        self.k = k
        self.q = p ** k
        self.zero = 0
        self.one = 1
        if k == 1:
            self.modulus = None
        else:
            self.modulus = tuple(_smallest_irreducible(p, k)[:-1])
        self._build_tables()
        self._irred_cache = {}

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    # -- encoding helpers ---------------------------------------------------

    def digits(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, ds):
        a = 0
        for c in reversed(ds):
            a = a * self.p + (c % self.p)
        return a

    def elements(self):
        return range(self.q)

    # -- table construction ---------------------------------------------------

    def _raw_mul(self, a, b):
        """Product via digit polynomials, used only to bootstrap tables."""
        if self.k == 1:
            return (a * b) % self.p
        f = _pp_mul(self.digits(a), self.digits(b), self.p)
        mod = list(self.modulus) + [1]
        return self.from_digits(_pp_mod(f, mod, self.p) + [0] * self.k)

    def _raw_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        q = self.q
        order_factors = _prime_factors(q - 1) if q > 2 else []
        gen = None
        for g in range(2, q):
            if all(self._raw_pow(g, (q - 1) // r) != 1 for r in order_factors):
                gen = g
                break
        if gen is None:
            gen = 1  # GF(2)
        self.gen = gen
        exp = [1] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, gen)
        if x != 1:
            raise ArithmeticError("generator order wrong")
        self._exp = exp
        self._log = log

    # -- arithmetic -----------------------------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return (a * b) % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        n = self.q - 1
        if n == 0 or a == 1:
            return 1
        if self.k == 1:
            return pow(a, e % n, self.p)
        return self._exp[(self._log[a] * e) % n]

    def element_order(self, a):
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        if a == 1:
            return 1
        n = self.q - 1
        l = self._log[a] if self.k > 1 else None
        if self.k == 1:
            # order of a in (Z/p)*
            o = n
            for r in _prime_factors(n):
                while o % r == 0 and pow(a, o // r, self.p) == 1:
                    o //= r
            return o
        return n // math.gcd(l, n)

    # -- Galois structure -----------------------------------------------------

    def frobenius(self, a, i=1):
        return self.pow(a, self.p ** i)

    def trace(self, a, sub_k=1):
        """Trace to the subfield GF(p^sub_k); sub_k must divide k."""
        if self.k % sub_k:
            raise ValueError("sub_k must divide k")
        t = 0
        x = a
        for _ in range(self.k // sub_k):
            t = self.add(t, x)
            x = self.frobenius(x, sub_k)
        return t

    def norm(self, a, sub_k=1):
        if self.k % sub_k:
            raise ValueError("sub_k must divide k")
        m = self.k // sub_k
        e = (self.q - 1) // (self.p ** sub_k - 1)
        return self.pow(a, e) if m > 0 else a

    # -- squares --------------------------------------------------------------

    def is_square(self, a):
        if a == 0:
            return True
        if self.p == 2:
            return True
        if self.k == 1:
            return pow(a, (self.p - 1) // 2, self.p) == 1
        return self._log[a] % 2 == 0

    def square_class(self, a):
        """0 for 0, +1 for nonzero squares, -1 for nonsquares."""
        if a == 0:
            return 0
        return 1 if self.is_square(a) else -1

    def sqrt(self, a):
        """A square root of a; raises if a is a nonsquare (q odd)."""
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        if self.k == 1:
            l = None
            # discrete log via the generator table built for k == 1? use Tonelli-free scan
            for x in range(1, self.p):
                if (x * x) % self.p == a:
                    return x
            raise ValueError(f"{a} is not a square in {self}")
        l = self._log[a]
        if l % 2:
            raise ValueError(f"{a} is not a square in {self}")
        return self._exp[l // 2]

    def nonsquare(self):
        """Smallest nonsquare element (q odd)."""
        if self.p == 2:
            raise ValueError("every element of a characteristic-2 field is a square")
        for a in range(2, self.q):
            if not self.is_square(a):
                return a
        raise AssertionError

    # -- polynomial helpers (coefficient lists over this field, low first) ----

    def ptrim(self, f):
        while f and f[-1] == 0:
            f.pop()
        return f

    def padd(self, f, g):
        n = max(len(f), len(g))
        out = [(self.add(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0))
               for i in range(n)]
        return self.ptrim(out)

    def psub(self, f, g):
        n = max(len(f), len(g))
        out = [(self.sub(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0))
               for i in range(n)]
        return self.ptrim(out)

    def pmul(self, f, g):
        if not f or not g:
            return []
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    if b:
                        out[i + j] = self.add(out[i + j], self.mul(a, b))
        return self.ptrim(out)

    def pscale(self, f, c):
        return self.ptrim([self.mul(a, c) for a in f])

    def pdivmod(self, f, g):
        g = self.ptrim(g[:])
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        f = f[:]
        dg = len(g) - 1
        inv_lead = self.inv(g[-1])
        quo = [0] * max(0, len(f) - dg)
        while self.ptrim(f) and len(f) - 1 >= dg:
            df = len(f) - 1
            c = self.mul(f[-1], inv_lead)
            quo[df - dg] = c
            for i, b in enumerate(g):
                f[df - dg + i] = self.sub(f[df - dg + i], self.mul(c, b))
            self.ptrim(f)
        return self.ptrim(quo), f

    def pmod(self, f, g):
        return self.pdivmod(f, g)[1]

    def pgcd(self, f, g):
        f, g = self.ptrim(f[:]), self.ptrim(g[:])
        while g:
            f, g = g, self.pmod(f, g)
        return self.pmonic(f)

    def pmonic(self, f):
        f = self.ptrim(f[:])
        if f and f[-1] != 1:
            f = self.pscale(f, self.inv(f[-1]))
        return f

    def peval(self, f, x):
        acc = 0
        for c in reversed(f):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def irreducibles(self, d):
        """All monic irreducibles of degree d, by integer encoding, cached."""
        if d in self._irred_cache:
            return self._irred_cache[d]
        smaller = []
        for dd in range(1, d // 2 + 1):
            smaller.extend(self.irreducibles(dd))
        out = []
        for enc in range(self.q ** d):
            coeffs = []
            e = enc
            for _ in range(d):
                coeffs.append(e % self.q)
                e //= self.q
            f = coeffs + [1]
            if d == 1:
                out.append(f)
                continue
            if f[0] == 0:
                continue
            if any(not self.pmod(f, g) for g in smaller):
                continue
            out.append(f)
        self._irred_cache[d] = out
        return out

    def pfactor(self, f):
        """Factor monic f into [(irreducible, multiplicity)], irreducibles in
        encoding order.  Trial division by small irreducibles; the remainder
        after stripping all factors of degree <= deg/2 is itself irreducible."""
        f = self.pmonic(f[:])
        if len(f) - 1 < 1:
            return []
        out = []
        deg = len(f) - 1
        for d in range(1, deg // 2 + 1):
            if len(f) - 1 < 2 * d:
                break
            for g in self.irreducibles(d):
                mult = 0
                while len(f) - 1 >= d:
                    quo, rem = self.pdivmod(f, g)
                    if rem:
                        break
                    f = quo
                    mult += 1
                if mult:
                    out.append((tuple(g), mult))
        if len(f) - 1 >= 1:
            out.append((tuple(f), 1))
        out.sort(key=lambda t: (len(t[0]), tuple(t[0])))
        return out

    def preciprocal(self, f):
        """x^deg(f) * f(1/x), made monic; the roots are the inverses."""
        if f[0] == 0:
            raise ValueError("reciprocal of a polynomial with root 0")
        return self.pmonic(list(reversed(f)))


@lru_cache(maxsize=None)
def field(p, k=1):
    """Shared GF(p^k) instance."""
    return GF(p, k)


def field_of_order(q):
    """Shared GF(q), factoring the prime power q into (p, k)."""
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    n, k = q, 0
    while n > 1 and n % p == 0:
        n //= p
        k += 1
    if n != 1 or k == 0:
        raise ValueError(f"q = {q} is not a prime power")
    return field(p) if k == 1 else field(p, k)


@lru_cache(maxsize=None)
def embedding(p, small_k, big_k):
    """The deterministic embedding GF(p^small_k) -> GF(p^big_k).

    Sends the small field's generator-of-presentation alpha to the smallest
    root (by encoding) of the small defining polynomial in the big field.
    Returns the list images[a] for all a in the small field.
    """
    if big_k % small_k:
        raise ValueError("not a subfield")
    small = field(p, small_k)
    big = field(p, big_k)
    if small_k == 1:
        return list(range(p))
    mod = [small.modulus[i] for i in range(small_k)] + [1]
    root = None
    for x in big.elements():
        if big.peval(mod, x) == 0:
            root = x
            break
    if root is None:
        raise ArithmeticError("defining polynomial has no root in the big field")
    images = []
    for a in small.elements():
        ds = small.digits(a)
        acc = 0
        for c in reversed(ds):
            acc = big.add(big.mul(acc, root), c)
        images.append(acc)
    return images
