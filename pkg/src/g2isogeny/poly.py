"""Univariate polynomials over F_p.

A polynomial is a list of ints, lowest degree first, with no trailing zero
coefficients; the zero polynomial is ``[]`` and has degree -1.  Every
function takes the modulus ``p`` explicitly and returns a fresh,
normalized list.
"""

import random

from .field import inv, legendre


def trim(u, p=None):
    if p is not None:
        u = [c % p for c in u]
    else:
        u = list(u)
    while u and u[-1] == 0:
        u.pop()
    return u


def degree(u):
    """Degree, with -1 standing in for the zero polynomial."""
    return len(u) - 1


def lead(u):
    return u[-1] if u else 0


def coeff(u, i):
    return u[i] if 0 <= i < len(u) else 0


def add(u, v, p):
    n = max(len(u), len(v))
    return trim([(coeff(u, i) + coeff(v, i)) % p for i in range(n)])


def sub(u, v, p):
    n = max(len(u), len(v))
    return trim([(coeff(u, i) - coeff(v, i)) % p for i in range(n)])


def neg(u, p):
    return [-c % p for c in u]


def scale(u, c, p):
    c %= p
    if c == 0:
        return []
    return [a * c % p for a in u]


def mul(u, v, p):
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] += a * b
    return trim([c % p for c in out])


def monic(u, p):
    if not u:
        return []
    return scale(u, inv(u[-1], p), p)


def divmod_poly(u, f, p):
    """Euclidean division; raises ZeroDivisionError for f = 0."""
    if not f:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(u)
    df = len(f) - 1
    if len(r) - 1 < df:
        return [], trim(r)
    li = inv(f[-1], p)
    q = [0] * (len(r) - df)
    for k in range(len(r) - 1, df - 1, -1):
        c = r[k] * li % p
        if c:
            q[k - df] = c
            for j in range(df + 1):
                r[k - df + j] = (r[k - df + j] - c * f[j]) % p
    return trim(q), trim(r[:df])


def mod(u, f, p):
    return divmod_poly(u, f, p)[1]


def exact_div(u, f, p):
    q, r = divmod_poly(u, f, p)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def gcd(u, v, p):
    """Monic gcd (gcd(0, 0) = 0)."""
    u, v = trim(u), trim(v)
    while v:
        u, v = v, mod(u, v, p)
    return monic(u, p)


def xgcd(u, v, p):
    """Return (g, s, t) with g = s*u + t*v monic (or all zero)."""
    r0, r1 = trim(u), trim(v)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_poly(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    c = inv(r0[-1], p)
    return scale(r0, c, p), scale(s0, c, p), scale(t0, c, p)


def evaluate(u, x, p):
    """Horner evaluation at an int (or any value supporting + and *)."""
    acc = 0
    for c in reversed(u):
        acc = acc * x + c
        if isinstance(acc, int):
            acc %= p
    return acc


def evaluate_naive(u, x, p):
    return sum(c * pow(x, i, p) for i, c in enumerate(u)) % p


def derivative(u, p):
    return trim([(i * c) % p for i, c in enumerate(u)][1:])


def is_squarefree(u, p):
    return degree(gcd(u, derivative(u, p), p)) == 0


def powmod(base, e, f, p):
    result = [1]
    base = mod(base, f, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), f, p)
        base = mod(mul(base, base, p), f, p)
        e >>= 1
    return result


def _split_equal_degree(g, k, p):
    """Split a monic product of distinct degree-k irreducibles.

    Cantor-Zassenhaus with shifts x + c first, then a fixed-seed stream of
    random polynomials, so the output never depends on global state.
    """
    n = degree(g)
    if n == k:
        return [g]
    e = (p ** k - 1) // 2
    candidates = ([c, 1] for c in range(p))
    rng = random.Random(n * 1000003 + p)
    while True:
        t = next(candidates, None)
        if t is None:
            t = trim([rng.randrange(p) for _ in range(n)])
            if degree(t) < 1:
                continue
        h = gcd(sub(powmod(t, e, g, p), [1], p), g, p)
        if 0 < degree(h) < n:
            return (_split_equal_degree(h, k, p)
                    + _split_equal_degree(exact_div(g, h, p), k, p))


def factor_squarefree(u, p):
    """Monic irreducible factors of a squarefree polynomial, sorted by (degree, coefficients)."""
    f = monic(u, p)
    factors = []
    k = 1
    xpk = [0, 1]
    while degree(f) >= 2 * k:
        xpk = powmod(xpk, p, f, p)
        g = gcd(sub(xpk, [0, 1], p), f, p)
        if degree(g) > 0:
            factors.extend(_split_equal_degree(g, k, p))
            f = exact_div(f, g, p)
            xpk = mod(xpk, f, p)
        k += 1
    if degree(f) > 0:
        factors.append(f)
    return sorted(factors, key=lambda g: (len(g), g))


def roots(u, p):
    """Distinct roots of u in F_p, ascending."""
    u = trim(u, p)
    if degree(u) <= 0:
        return []
    g = gcd(sub(powmod([0, 1], p, u, p), [0, 1], p), u, p)
    if degree(g) <= 0:
        return []
    return sorted(-h[0] % p for h in _split_equal_degree(g, 1, p))


def quadratic_is_irreducible(a, p):
    """For monic a = x^2 + a1 x + a0: discriminant is a non-residue."""
    disc = (a[1] * a[1] - 4 * a[0]) % p
    return legendre(disc, p) == -1
