"""The 3-Weil pairing on rational 3-torsion, evaluated entirely over F_p.

For D = [A - D_inf] of order 3 with A = (a, y - b) affine of degree 2,
Hensel-lifting b to a square root c of f modulo a^3 gives a cubic with
div(y - c(x)) = 3A - 3D_inf.  Since R + iota(R) ~ D_inf for any affine R,
D is also represented by the affine divisor A - R - iota(R), with function
(y - c(x)) / (x - x_R)^3.  Weil's formula e(D1, D2) = h1(D2') / h2(D1')
then only needs values of polynomials at the roots of a quadratic, i.e.
resultants, and the y-coordinates of R and Q cancel in pairs.
"""

from . import poly
from .field import inv
from .jacobian import IDENTITY, add


def cube_root_lift(e, H):
    """Cubic c with c = b mod a and c^2 = f mod a^3, or None when b shares a root with a."""
    p, f = H.p, H.f
    a = list(e.a)
    a2 = poly.mul(a, a, p)
    a3 = poly.mul(a2, a, p)
    c = poly.mod(list(e.b), a, p)
    for modulus in (a2, a3):
        g, s, _ = poly.xgcd(poly.scale(c, 2, p), modulus, p)
        if poly.degree(g) != 0:
            return None
        err = poly.sub(poly.mul(c, c, p), f, p)
        c = poly.mod(poly.sub(c, poly.mul(err, s, p), p), modulus, p)
    if poly.degree(c) > 3:
        raise ArithmeticError("%s is not 3-torsion" % (e,))
    return c


def _norm(a, g, p):
    """Product of g over the two roots of the monic quadratic a."""
    r = poly.mod(g, a, p)
    r0, r1 = poly.coeff(r, 0), poly.coeff(r, 1)
    return (r1 * r1 * a[0] - r0 * r1 * a[1] + r0 * r0) % p


def _pair_once(D1, D2, c1, c2, H, xR, xQ):
    p, f = H.p, H.f
    ev = lambda u, x: poly.evaluate(u, x, p)
    a1, a2 = list(D1.a), list(D2.a)
    num = (_norm(a2, poly.sub(list(D2.b), c1, p), p) * pow(ev(a1, xQ), 3, p)
           * (ev(c2, xR) ** 2 - ev(f, xR)))
    den = (_norm(a1, poly.sub(list(D1.b), c2, p), p) * pow(ev(a2, xR), 3, p)
           * (ev(c1, xQ) ** 2 - ev(f, xQ)))
    if num % p == 0 or den % p == 0:
        return None
    return num * inv(den, p) % p


def _good_points(D1, D2, c1, c2, H):
    """Affine x-values usable as R (first) and Q (second), disjoint from both supports."""
    p, f = H.p, H.f
    ev = lambda u, x: poly.evaluate(u, x, p)
    out = []
    for x in range(p):
        if ev(list(D1.a), x) and ev(list(D2.a), x) \
                and (ev(c1, x) ** 2 - ev(f, x)) % p and (ev(c2, x) ** 2 - ev(f, x)) % p:
            out.append(x)
        if len(out) == 4:
            break
    return out


def _evaluable(e):
    return e.d == 2 and len(e.a) == 3


def weil_pairing3(D1, D2, H):
    """e_3(D1, D2), a cube root of unity in F_p, or None if no affine basis is usable.

    When D1 and D2 themselves are not both supported on affine points,
    another basis (X, Y) of <D1, D2> is used and its value is converted
    back: e(X, Y) = e(D1, D2)^det, det being the change-of-basis
    determinant mod 3.  Two independent choices of auxiliary points are
    compared as a self-check.
    """
    p = H.p
    if D2 in (IDENTITY, D1, add(D1, D1, H)) or D1 == IDENTITY:
        return 1
    for X, Y, det in _bases(D1, D2, H):
        if not (_evaluable(X) and _evaluable(Y)):
            continue
        if poly.degree(poly.gcd(list(X.a), list(Y.a), p)) > 0:
            continue
        c1, c2 = cube_root_lift(X, H), cube_root_lift(Y, H)
        if c1 is None or c2 is None:
            continue
        pts = _good_points(X, Y, c1, c2, H)
        if len(pts) < 4:
            continue
        v1 = _pair_once(X, Y, c1, c2, H, pts[0], pts[1])
        v2 = _pair_once(X, Y, c1, c2, H, pts[2], pts[3])
        if v1 is None or v2 is None:
            continue
        if v1 != v2 or pow(v1, 3, p) != 1:
            raise ArithmeticError("inconsistent pairing values %d, %d" % (v1, v2))
        return pow(v1, det, p)     # det = det^-1 mod 3
    return None


def _bases(D1, D2, H):
    """Ordered bases (X, Y, det mod 3) of <D1, D2>, starting with (D1, D2, 1)."""
    m1 = [IDENTITY, D1, add(D1, D1, H)]
    m2 = [IDENTITY, D2, add(D2, D2, H)]
    order = [(1, 0), (0, 1), (1, 1), (1, 2), (2, 0), (0, 2), (2, 1), (2, 2)]
    elems = {(i, j): add(m1[i], m2[j], H) for i, j in order}
    for (i, j), X in elems.items():
        for (k, l), Y in elems.items():
            det = (i * l - j * k) % 3
            if det:
                yield X, Y, det


def is_isotropic(D1, D2, H):
    """True/False when the pairing can be evaluated, None otherwise."""
    e = weil_pairing3(D1, D2, H)
    return None if e is None else e == 1
