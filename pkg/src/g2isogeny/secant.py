"""Secant lines of the rational normal curve and their hyperplane sections.

The double cover H -> P^1 followed by the degree-2l Veronese map sends a
point (X : Y : Z) to (Z^2l : X Z^(2l-1) : ... : X^2l).  A nonzero class e
with effective part P + Q spans the secant line through the images of P
and Q (the tangent line when they coincide); it only depends on the
x-coordinates, so e and -e give the same line.

``secant_meets_hyperplane`` evaluates the closed formulas for the point
where that line meets a hyperplane sum H_i U_i = 0; ``secant_oracle``
recomputes it from scratch by splitting the support over F_{p^2}.
"""

from . import poly
from .errors import UnexpectedContainment, ZeroElement
from .field import QuadraticExtension, inv


class _Contained:
    """Sentinel: the whole secant line lies in the hyperplane."""

    def __repr__(self):
        return "CONTAINED"


CONTAINED = _Contained()


def normalize_point(v, p):
    """Scale so the first nonzero coordinate is 1; ints mod p."""
    v = [c % p for c in v]
    for c in v:
        if c:
            s = inv(c, p)
            return tuple(x * s % p for x in v)
    raise ValueError("zero vector is not a projective point")


def rat_embed(P, ell, p):
    """Image of a curve point under the degree-2l rational normal curve map.

    Coordinates of P may be ints or F_{p^2} elements; the result is
    normalized to a leading 1.
    """
    n = 2 * ell
    if P.Z == 0:
        return tuple([0] * n + [1])
    x = P.X
    if isinstance(x, int):
        return tuple(pow(x, i, p) for i in range(n + 1))
    out = [x ** 0]
    for _ in range(n):
        out.append(out[-1] * x)
    return tuple(out)


def sigma_seq(a1, a0, n, p):
    """sigma_1 .. sigma_n with sigma_1 = 1, sigma_k = -a1 sigma_(k-1) - a0 sigma_(k-2)."""
    out = [0, 1]        # sigma_0 = 0 keeps the recurrence uniform
    while len(out) <= n:
        out.append((-a1 * out[-1] - a0 * out[-2]) % p)
    return out[1:n + 1]


def pi_seq(a1, a0, n, p):
    """pi_0 .. pi_n: power sums of the roots of x^2 + a1 x + a0."""
    out = [2 % p, -a1 % p]
    while len(out) <= n:
        out.append((-a1 * out[-1] - a0 * out[-2]) % p)
    return out[:n + 1]


def secant_intersection(e, Hc, ell, p):
    """Unnormalized point of Secant(e) on the hyperplane, or CONTAINED.

    ``Hc`` = (H_0 .. H_2l).  The four shapes of e:

    1. a = 1, d = 2: the tangent at infinity;
    2. deg a = 1: a finite point and a point at infinity;
    3. deg a = 2, distinct roots;
    4. deg a = 2, a double root.
    """
    n = 2 * ell
    Hc = [c % p for c in Hc]
    if len(Hc) != n + 1:
        raise ValueError("hyperplane needs %d coefficients" % (n + 1))
    if e.d == 0:
        raise ZeroElement("the secant of the zero class is undefined")
    a = list(e.a)
    da = poly.degree(a)
    h = poly.trim(Hc)

    if da == 0:
        if Hc[n] == 0 and Hc[n - 1] == 0:
            return CONTAINED
        return tuple([0] * (n - 1) + [Hc[n], -Hc[n - 1] % p])

    if da == 1:
        alpha = -a[0] % p
        h_alpha = poly.evaluate(h, alpha, p)
        if Hc[n] == 0 and h_alpha == 0:
            return CONTAINED
        g = [Hc[n] * pow(alpha, i, p) % p for i in range(n + 1)]
        g[n] = (g[n] - h_alpha) % p
        return tuple(g)

    a0, a1 = a[0], a[1]
    if (a1 * a1 - 4 * a0) % p:
        if not poly.mod(h, a, p):
            return CONTAINED
        sigma = [0] + sigma_seq(a1, a0, n, p)     # sigma[k] = sigma_k, sigma_0 = 0
        sig = lambda k: sigma[k] if k >= 1 else 0
        g = []
        for i in range(n + 1):
            acc = 0
            for j in range(n + 1):
                if Hc[j]:
                    acc += Hc[j] * (pow(a0, j, p) * sig(i - j) - pow(a0, i, p) * sig(j - i))
            g.append(acc % p)
        return tuple(g)

    alpha = -a1 * inv(2, p) % p
    h_alpha = poly.evaluate(h, alpha, p)
    dh_alpha = poly.evaluate(poly.derivative(h, p), alpha, p)
    if h_alpha == 0 and dh_alpha == 0:
        return CONTAINED
    g = [0] * (n + 1)
    for i in range(n + 1):
        t = i * pow(alpha, i - 1, p) * h_alpha if i else 0
        g[i] = (t - pow(alpha, i, p) * dh_alpha) % p
    return tuple(g)


def secant_meets_hyperplane(e, Hc, ell, p):
    """Secant(e) intersected with sum H_i U_i = 0, normalized, or CONTAINED."""
    g = secant_intersection(e, Hc, ell, p)
    if g is CONTAINED:
        return g
    return normalize_point(g, p)


def _spanning_pair(e, ell, p):
    """Two vectors over F_{p^2} spanning the secant line of e."""
    L = QuadraticExtension(p)
    n = 2 * ell
    a = list(e.a)
    da = poly.degree(a)
    inf_point = [L.zero] * n + [L.one]

    def veronese(x):
        out = [L.one]
        for _ in range(n):
            out.append(out[-1] * x)
        return out

    def tangent(x):
        # derivative of (1, x, ..., x^n) in x
        return [L.zero] + [L(i) * x ** (i - 1) for i in range(1, n + 1)]

    if da == 0:
        # both points sit at the same place at infinity: tangent there
        t = [L.zero] * (n + 1)
        t[n - 1] = L.one
        return inf_point, t
    if da == 1:
        return veronese(L(-a[0])), inf_point
    disc = (a[1] * a[1] - 4 * a[0]) % p
    half = L(inv(2, p))
    if disc == 0:
        alpha = L(-a[1]) * half
        return veronese(alpha), tangent(alpha)
    r = L.sqrt_of_base(disc)
    return veronese((L(-a[1]) + r) * half), veronese((L(-a[1]) - r) * half)


def secant_oracle(e, Hc, ell, p):
    """Independent recomputation of :func:`secant_meets_hyperplane`.

    Builds the secant as the span of two explicit vectors over F_{p^2} and
    intersects with the hyperplane by solving one linear equation.
    """
    if e.d == 0:
        raise ZeroElement("the secant of the zero class is undefined")
    A, B = _spanning_pair(e, ell, p)
    hA = sum((c * x for c, x in zip(Hc, A)), A[0] * 0)
    hB = sum((c * x for c, x in zip(Hc, B)), A[0] * 0)
    if hA == 0 and hB == 0:
        return CONTAINED
    v = [hB * x - hA * y for x, y in zip(A, B)]
    lead = next(c for c in v if c != 0)
    s = lead.inverse()
    v = [c * s for c in v]
    if not all(c.in_base_field() for c in v):
        raise ArithmeticError("secant point is not F_p-rational")
    return tuple(c.to_int() for c in v)


def hyperplane_from_weierstrass(alpha, F, ell, p):
    """Coefficients of sum_i alpha_i W_i, where W_i = sum_j F_j U_(i+j).

    On the rational normal curve W_i restricts to X^i Z^(2l-6-i) F(X, Z),
    so the result is the coefficient list of alpha(x) f(x) padded to 2l+1.
    """
    n = 2 * ell
    if len(alpha) != n - 5:
        raise ValueError("need %d coefficients alpha_i for l = %d" % (n - 5, ell))
    out = [0] * (n + 1)
    for i, ai in enumerate(alpha):
        for j, fj in enumerate(F):
            out[i + j] = (out[i + j] + ai * fj) % p
    return out


def gamma_vector(e, H):
    """Raw (unnormalized) secant point v_e for l = 3 and the hyperplane H = F."""
    g = secant_intersection(e, H.F, 3, H.p)
    if g is CONTAINED:
        raise UnexpectedContainment(
            "Secant(%s) lies in the hyperplane; the class cannot be 3-torsion" % (e,))
    return g
