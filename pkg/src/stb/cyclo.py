"""Exact arithmetic with sums of roots of unity.

A sum sum_j v[j] * zeta_M^j (v integer) is an integer exactly when the
polynomial V(x) = sum v[j] x^j is congruent to a constant mod the M-th
cyclotomic polynomial.  reduce_to_int performs that division over Z and
refuses anything with a nonconstant remainder, so torus character
multiplicities never pass through floating point.
"""

from functools import lru_cache


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _zpoly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _zpoly_divmod(a, b):
    """Division in Z[x]; b must be monic."""
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    a = list(a)
    db = len(b) - 1
    quot = [0] * max(1, len(a) - db)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        while da >= 0 and a[da] == 0:
            da -= 1
        if da < db:
            break
        c = a[da]
        quot[da - db] = c
        for j in range(db + 1):
            a[da - db + j] -= c * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return quot, a


@lru_cache(maxsize=None)
def cyclotomic(n):
    """Coefficients of Phi_n, ascending, as a tuple of ints."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    den = [1]
    for d in _divisors(n):
        if d < n:
            den = _zpoly_mul(den, list(cyclotomic(d)))
    quot, rem = _zpoly_divmod(num, den)
    if any(rem) and rem != [0]:
        raise AssertionError("cyclotomic division left a remainder")
    while len(quot) > 1 and quot[-1] == 0:
        quot.pop()
    return tuple(quot)


def reduce_to_int(vec, M):
    """The integer equal to sum_j vec[j] zeta_M^j, proven by exact division.

    Raises if the sum is not a rational integer."""
    if M == 1:
        return sum(vec)
    v = list(vec)
    if len(v) > M:
        # fold exponents mod M first
        folded = [0] * M
        for j, c in enumerate(v):
            folded[j % M] += c
        v = folded
    phi = list(cyclotomic(M))
    _, rem = _zpoly_divmod(v, phi)
    if len(rem) > 1 and any(rem[1:]):
        raise AssertionError("root-of-unity sum is not an integer")
    return rem[0] if rem else 0
