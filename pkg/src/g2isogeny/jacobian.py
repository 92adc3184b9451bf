"""Extended Mumford representation <a, b, d> and the Jacobian group law.

A nonzero class is written [P + Q - D_inf], with D_inf the divisor at
infinity.  The effective part P + Q is cut out by (A(X,Z), Y - B(X,Z)),
where A is the degree-d homogenization of the monic ``a`` and B the cubic
homogenization of ``b``.  With k = d - deg(a) > 0 the divisor contains the
point (1 : b_3 : 0) with multiplicity k, so b_3 must be a square root of
F_6.

Canonical representatives, which ``add`` and ``normalize`` always return:

* d = 0: <1, 0, 0>, the identity;
* k = 0: b reduced modulo a;
* k = 1: b = t + c for a constant c;
* k = 2: b = t,

where t is the cubic part of the Laurent square root of f on the chosen
branch at infinity, i.e. the unique cubic with leading coefficient b_3
and deg(t^2 - f) <= 2.  When F_6 = 0 the representation is the ordinary
Mumford one with d = deg(a).
"""

from dataclasses import dataclass

from . import poly
from .errors import (BadDegreeFlag, DivisibilityFails, GeneratorsDependent,
                     InfinityContactFails, NotMonic,
                     NotOrderThree)
from .field import QuadraticExtension, inv, legendre, sqrt_mod


@dataclass(frozen=True)
class MumfordPoint:
    a: tuple
    b: tuple
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(poly.trim(self.a)))
        object.__setattr__(self, "b", tuple(poly.trim(self.b)))

    @property
    def is_identity(self):
        return self.d == 0

    def key(self):
        return (self.d, self.a, self.b)

    def to_json(self):
        b = list(self.b) + [0] * (4 - len(self.b))
        return {"a": list(self.a), "b": b, "d": self.d}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(int(c) for c in obj["a"]),
                   tuple(int(c) for c in obj["b"]), int(obj["d"]))

    def __str__(self):
        return "<%s, %s, %d>" % (_fmt(self.a), _fmt(self.b), self.d)


def _fmt(u):
    if not u:
        return "0"
    terms = []
    for i in range(len(u) - 1, -1, -1):
        c = u[i]
        if not c:
            continue
        x = "" if i == 0 else ("x" if i == 1 else "x^%d" % i)
        if not x:
            terms.append(str(c))
        elif c == 1:
            terms.append(x)
        else:
            terms.append("%d%s" % (c, x))
    return " + ".join(terms)


IDENTITY = MumfordPoint((1,), (), 0)


def identity():
    return IDENTITY


def truncated_sqrt(H, s):
    """Cubic t with leading coefficient s (s^2 = F_6) and deg(t^2 - f) <= 2."""
    p, F = H.p, H.F
    if s * s % p != F[6] or s % p == 0:
        raise InfinityContactFails("%d is not a square root of F_6 = %d" % (s, F[6]))
    h = inv(2 * s, p)
    t3 = s % p
    t2 = F[5] * h % p
    t1 = (F[4] - t2 * t2) * h % p
    t0 = (F[3] - 2 * t2 * t1) * h % p
    return [t0, t1, t2, t3]


def _canonical(H, u, v, k, s):
    """Build the canonical triple from affine data (u, v), multiplicity k on branch s."""
    p = H.p
    if not u or poly.degree(u) + k == 0:
        return IDENTITY
    if H.F[6] == 0:
        return MumfordPoint(tuple(u), tuple(poly.mod(v, u, p)), poly.degree(u))
    if k == 0:
        return MumfordPoint(tuple(u), tuple(poly.mod(v, u, p)), 2)
    t = truncated_sqrt(H, s)
    if k == 2:
        return MumfordPoint((1,), tuple(poly.trim(t)), 2)
    alpha = -u[0] % p
    c = (poly.evaluate(v, alpha, p) - poly.evaluate(t, alpha, p)) % p
    return MumfordPoint(tuple(u), tuple(poly.add(t, [c], p)), 2)


def _check(e, H, loose):
    p, f = H.p, H.f
    a, b, d = list(e.a), list(e.b), e.d
    if not a or a[-1] != 1:
        raise NotMonic("a = %s is not monic" % (e.a,))
    da = poly.degree(a)
    if da > 2 or poly.degree(b) > 3:
        raise BadDegreeFlag("deg a <= 2 and deg b <= 3 required")
    if d not in (0, 1, 2) or da > d:
        raise BadDegreeFlag("bad degree flag d = %r for deg a = %d" % (d, da))
    if H.F[6] != 0 and d == 1:
        raise BadDegreeFlag("d = 1 needs F_6 = 0")
    if H.F[6] == 0 and d != da:
        raise BadDegreeFlag("d must equal deg a when F_6 = 0")
    if d == 0:
        if b:
            raise BadDegreeFlag("the identity is <1, 0, 0>")
        return
    g = poly.sub(poly.mul(b, b, p), f, p)
    if poly.mod(g, a, p):
        raise DivisibilityFails("a does not divide b^2 - f")
    k = d - da
    if k:
        if poly.coeff(b, 3) ** 2 % p != H.F[6]:
            raise InfinityContactFails("leading coefficient of b is not a root of F_6")
        bound = 6 - k if loose else 6 - 2 * k
        if poly.degree(g) > bound:
            raise InfinityContactFails("deg(b^2 - f) = %d exceeds %d" % (poly.degree(g), bound))


def validate(e, H):
    """Raise an :class:`InvalidElement` subclass unless ``e`` satisfies the invariants."""
    _check(e, H, loose=False)


def normalize(e, H):
    """Canonical representative of a valid triple.

    Accepts any b making (A, Y - B) cut out the divisor, i.e. the weaker
    contact bound deg(b^2 - f) <= 6 - k.
    """
    _check(e, H, loose=True)
    if e.d == 0:
        return IDENTITY
    u, v, k, s = _decompose(e, H)
    return _canonical(H, u, v, k, s)


def _decompose(e, H):
    """(u, v, k, branch): affine support, its y-interpolant, and the infinity part."""
    p = H.p
    u = list(e.a)
    v = poly.mod(list(e.b), u, p)
    k = e.d - poly.degree(u) if H.F[6] != 0 else 0
    s = poly.coeff(e.b, 3) if k else None
    return u, v, k, s


def negate(e, H):
    p = H.p
    return MumfordPoint(e.a, tuple(poly.neg(list(e.b), p)), e.d)


def _compose(u1, v1, u2, v2, f, p):
    """Cantor composition; returns (u, v, deg of the cancelled part)."""
    d1, e1, e2 = poly.xgcd(u1, u2, p)
    d, c1, c2 = poly.xgcd(d1, poly.add(v1, v2, p), p)
    s1 = poly.mul(c1, e1, p)
    s2 = poly.mul(c1, e2, p)
    u = poly.exact_div(poly.mul(u1, u2, p), poly.mul(d, d, p), p)
    num = poly.add(poly.add(poly.mul(poly.mul(s1, u1, p), v2, p),
                            poly.mul(poly.mul(s2, u2, p), v1, p), p),
                   poly.mul(c2, poly.add(poly.mul(v1, v2, p), f, p), p), p)
    v = poly.mod(poly.exact_div(num, d, p), u, p) if poly.degree(u) > 0 else []
    return u, v, poly.degree(d)


def add(e1, e2, H):
    """Group law; both inputs must be canonical (as returned by normalize)."""
    if e1.d == 0:
        return e2
    if e2.d == 0:
        return e1
    if H.F[6] == 0:
        return _add_one_point(e1, e2, H)
    return _add_two_points(e1, e2, H)


def _add_one_point(e1, e2, H):
    p, f = H.p, H.f
    u, v, _ = _compose(list(e1.a), poly.mod(list(e1.b), list(e1.a), p),
                       list(e2.a), poly.mod(list(e2.b), list(e2.a), p), f, p)
    while poly.degree(u) > 2:
        u = poly.monic(poly.exact_div(poly.sub(f, poly.mul(v, v, p), p), u, p), p)
        v = poly.mod(poly.neg(v, p), u, p)
    return _canonical(H, u, v, 0, None)


def _add_two_points(e1, e2, H):
    p, f = H.p, H.f
    u1, v1, k1, s1 = _decompose(e1, H)
    u2, v2, k2, s2 = _decompose(e2, H)
    m = 2
    if k1 and k2 and s1 != s2:
        c = min(k1, k2)
        k1 -= c
        k2 -= c
        m -= c
    K = k1 + k2
    s = s1 if k1 else (s2 if k2 else None)
    u, v, dd = _compose(u1, v1, u2, v2, f, p)
    m -= dd
    if m == 0:
        return IDENTITY
    if m == 1:
        return _canonical(H, u, v, K, s)

    # m = 2: deg u + K = 4.  Interpolate a cubic c through the affine support
    # whose top K coefficients agree with the truncated root on branch s.
    n = poly.degree(u)
    w = [0] * K
    if K:
        t = truncated_sqrt(H, s)
        for j in range(3, n - 1, -1):
            idx = j - n
            cur = poly.coeff(v, j)
            for i in range(idx + 1, K):
                cur += w[i] * poly.coeff(u, j - i)
            w[idx] = (t[j] - cur) % p
    c = poly.add(v, poly.mul(u, poly.trim(w), p), p)
    g = poly.sub(poly.mul(c, c, p), f, p)
    u_new = poly.monic(poly.exact_div(g, u, p), p)
    v_new = poly.mod(poly.neg(c, p), u_new, p) if poly.degree(u_new) > 0 else []
    D = poly.degree(g)
    if D == 6:
        return _canonical(H, u_new, v_new, 0, None)
    sigma = poly.coeff(c, 3)
    k_new = 2 - poly.degree(u_new)
    return _canonical(H, u_new, v_new, k_new, -sigma % p)


def sub(e1, e2, H):
    return add(e1, negate(e2, H), H)


def scalar_mul(n, e, H):
    if n < 0:
        return scalar_mul(-n, negate(e, H), H)
    result = IDENTITY
    base = e
    while n:
        if n & 1:
            result = add(result, base, H)
        base = add(base, base, H)
        n >>= 1
    return result


def order_small(e, H, bound):
    """Least k <= bound with k*e = 0, or None."""
    acc = e
    for k in range(1, bound + 1):
        if acc.d == 0:
            return k
        acc = add(acc, e, H)
    return None


def from_points(P, Q, H):
    """The class [P + Q - D_inf] for F_p-rational curve points P and Q."""
    p = H.p
    pts = [P, Q]
    aff = [pt for pt in pts if pt.Z != 0]
    inf = [pt for pt in pts if pt.Z == 0]
    if H.F[6] == 0:
        # D_inf = 2 (1:0:0) and (1:0:0) is a Weierstrass point
        if len(aff) == 2:
            return _from_affine_pair(aff[0], aff[1], H)
        if len(aff) == 1:
            x, y = aff[0].X % p, aff[0].Y % p
            return MumfordPoint(((-x) % p, 1), (y,), 1)
        return IDENTITY
    if len(aff) == 2:
        return _from_affine_pair(aff[0], aff[1], H)
    if len(aff) == 1:
        x, y = aff[0].X % p, aff[0].Y % p
        return _canonical(H, [(-x) % p, 1], [y], 1, inf[0].Y % p)
    s1, s2 = inf[0].Y % p, inf[1].Y % p
    if s1 != s2:
        return IDENTITY
    return _canonical(H, [1], [], 2, s1)


def _from_affine_pair(P, Q, H):
    p = H.p
    x1, y1, x2, y2 = P.X % p, P.Y % p, Q.X % p, Q.Y % p
    if x1 != x2:
        slope = (y2 - y1) * inv(x2 - x1, p) % p
        b = [(y1 - slope * x1) % p, slope]
        a = poly.mul([-x1 % p, 1], [-x2 % p, 1], p)
        return normalize(MumfordPoint(tuple(a), tuple(b), 2), H)
    if (y1 + y2) % p == 0:
        return IDENTITY
    # P = Q, not a Weierstrass point: tangent line
    slope = poly.evaluate(poly.derivative(H.f, p), x1, p) * inv(2 * y1, p) % p
    b = [(y1 - slope * x1) % p, slope]
    a = poly.mul([-x1 % p, 1], [-x1 % p, 1], p)
    return normalize(MumfordPoint(tuple(a), tuple(b), 2), H)


def random_element(H, rng):
    """A random class with d = 2 and deg a = 2 (rejection sampling on a)."""
    p, f = H.p, H.f
    L = QuadraticExtension(p)
    while True:
        a = [rng.randrange(p), rng.randrange(p), 1]
        disc = (a[1] * a[1] - 4 * a[0]) % p
        chi = legendre(disc, p)
        if chi == 0:
            continue
        if chi == 1:
            r = sqrt_mod(disc, p)
            h = inv(2, p)
            x1, x2 = (-a[1] + r) * h % p, (-a[1] - r) * h % p
            y1sq, y2sq = poly.evaluate(f, x1, p), poly.evaluate(f, x2, p)
            if legendre(y1sq, p) < 0 or legendre(y2sq, p) < 0:
                continue
            y1 = sqrt_mod(y1sq, p) * rng.choice((1, -1)) % p
            y2 = sqrt_mod(y2sq, p) * rng.choice((1, -1)) % p
            slope = (y2 - y1) * inv(x2 - x1, p) % p
            b = [(y1 - slope * x1) % p, slope]
        else:
            rt = (L(-a[1]) + L.sqrt_of_base(disc)) * L(inv(2, p))
            fy = poly.evaluate(f, rt, p)
            if not fy.is_square():
                continue
            y = fy.sqrt() * rng.choice((1, -1))
            yc, rc = y.conjugate(), rt.conjugate()
            b1 = (y - yc) / (rt - rc)
            b0 = y - b1 * rt
            b = [b0.to_int(), b1.to_int()]
        return MumfordPoint(tuple(a), tuple(poly.trim(b)), 2)


@dataclass(frozen=True)
class KernelSubgroup:
    generators: tuple
    elements: tuple
    half_set: tuple


def build_subgroup(D1, D2, H):
    """The order-9 group <D1, D2> with a canonical half-set S^+-."""
    gens = []
    for D in (D1, D2):
        D = normalize(D, H)
        if D.d == 0 or scalar_mul(3, D, H).d != 0:
            raise NotOrderThree("%s does not have order 3" % (D,))
        gens.append(D)
    D1, D2 = gens
    multiples1 = [IDENTITY, D1, add(D1, D1, H)]
    multiples2 = [IDENTITY, D2, add(D2, D2, H)]
    elements = [add(x, y, H) for x in multiples1 for y in multiples2]
    if len(set(elements)) != 9:
        raise GeneratorsDependent("the generators span a group of order %d"
                                  % len(set(elements)))
    reps = set()
    for e in elements:
        if e.d == 0:
            continue
        reps.add(min(e, negate(e, H), key=MumfordPoint.key))
    half = tuple(sorted(reps, key=MumfordPoint.key))
    if len(half) != 4:
        raise GeneratorsDependent("expected four +- pairs, found %d" % len(half))
    return KernelSubgroup(tuple(gens), tuple(elements), half)
