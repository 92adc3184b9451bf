"""Ternary forms in V0, V1, V2 and binary forms in X, Z.

Ternary forms are dicts {(e0, e1, e2): coefficient}.  Coefficient vectors
for quadrics and cubics follow the monomial orders QUAD_MONOMIALS and
CUBIC_MONOMIALS (index tuples i <= j <= k, meaning V_i V_j V_k).

A binary form of degree n is a list [c_0, ..., c_n] where c_i multiplies
X^i Z^(n-i).  Its entries may be ints (mod p) or F_{p^2} elements.
"""

from itertools import combinations_with_replacement

from .field import inv

QUAD_MONOMIALS = tuple(combinations_with_replacement(range(3), 2))
CUBIC_MONOMIALS = tuple(combinations_with_replacement(range(3), 3))


def exponent(mono):
    e = [0, 0, 0]
    for i in mono:
        e[i] += 1
    return tuple(e)


def from_vector(coeffs, monomials, p):
    form = {}
    for c, m in zip(coeffs, monomials):
        if c % p:
            form[exponent(m)] = c % p
    return form


def to_vector(form, monomials):
    return [form.get(exponent(m), 0) for m in monomials]


def quadric(coeffs, p):
    return from_vector(coeffs, QUAD_MONOMIALS, p)


def cubic(coeffs, p):
    return from_vector(coeffs, CUBIC_MONOMIALS, p)


def mul(A, B, p):
    out = {}
    for ea, ca in A.items():
        for eb, cb in B.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            out[e] = (out.get(e, 0) + ca * cb) % p
    return {e: c for e, c in out.items() if c}


def linear(i):
    e = [0, 0, 0]
    e[i] = 1
    return {tuple(e): 1}


def divide(A, B, p):
    """Division with remainder by a single form, lex order V0 > V1 > V2.

    With one divisor the remainder is zero exactly when B divides A.
    """
    if not B:
        raise ZeroDivisionError("division by the zero form")
    lead_e = max(B)
    lead_inv = inv(B[lead_e], p)
    r = dict(A)
    q = {}
    rem = {}
    while r:
        e = max(r)
        c = r.pop(e)
        if all(x >= y for x, y in zip(e, lead_e)):
            qe = tuple(x - y for x, y in zip(e, lead_e))
            qc = c * lead_inv % p
            q[qe] = (q.get(qe, 0) + qc) % p
            for eb, cb in B.items():
                if eb == lead_e:
                    continue
                t = tuple(x + y for x, y in zip(qe, eb))
                v = (r.get(t, 0) - qc * cb) % p
                if v:
                    r[t] = v
                else:
                    r.pop(t, None)
        else:
            rem[e] = c
    return q, rem


def divides(B, A, p):
    return not divide(A, B, p)[1]


def evaluate(form, point, p):
    """Value at a point with int or F_{p^2} coordinates."""
    acc = 0
    for e, c in form.items():
        term = c
        for x, k in zip(point, e):
            term = term * x ** k
        acc = acc + term
    return acc % p if isinstance(acc, int) else acc


def _bmul(u, v, p):
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            out[i + j] = out[i + j] + a * b
    return [c % p if isinstance(c, int) else c for c in out]


def _badd(u, v, p):
    return [(a + b) % p if isinstance(a + b, int) else a + b for a, b in zip(u, v)]


def substitute(form, binaries, p):
    """form(B0, B1, B2) for binary forms B_i of a common degree."""
    n = len(binaries[0]) - 1
    deg = sum(next(iter(form))) if form else 0
    out = [0] * (n * deg + 1)
    powers = [[[1]] for _ in range(3)]
    for i in range(3):
        for _ in range(deg):
            powers[i].append(_bmul(powers[i][-1], binaries[i], p))
    for e, c in form.items():
        term = [c]
        for i in range(3):
            term = _bmul(term, powers[i][e[i]], p)
        out = _badd(out, term, p)
    return out


def format_ternary(form, names=("V0", "V1", "V2")):
    """Human-readable form, terms in degree-lex order (V0 first)."""
    if not form:
        return "0"
    terms = []
    for e in sorted(form, reverse=True):
        c = form[e]
        mono = []
        for name, k in zip(names, e):
            if k == 1:
                mono.append(name)
            elif k > 1:
                mono.append("%s^%d" % (name, k))
        m = "*".join(mono)
        terms.append(m if c == 1 else "%d*%s" % (c, m))
    return " + ".join(terms)


def format_binary(B, names=("X", "Z")):
    X, Z = names
    n = len(B) - 1
    terms = []
    for i in range(n, -1, -1):
        c = B[i]
        if not c:
            continue
        mono = []
        if i:
            mono.append(X if i == 1 else "%s^%d" % (X, i))
        if n - i:
            mono.append(Z if n - i == 1 else "%s^%d" % (Z, n - i))
        m = "*".join(mono)
        if not m:
            terms.append(str(c))
        elif c == 1:
            terms.append(m)
        else:
            terms.append("%s*%s" % (c, m))
    return " + ".join(terms) if terms else "0"
