"""Independent checks: naive point counts, Weil polynomials, Igusa-Clebsch invariants.

Counting is a vectorized character sum over the whole field with numpy,
so the cost is O(p) for F_p and O(p^2) for F_{p^2}.  Nothing here shares
code with the isogeny pipeline beyond the basic field helpers.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt

import numpy as np

from .errors import ParityError, SingularCurve, TooLarge
from .field import inv, smallest_nonresidue

MAX_FIELD = 2 ** 32
_CHUNK = 1 << 20


# --- point counting -------------------------------------------------------

def _square_table(p):
    table = np.full(p, -1, dtype=np.int8)
    x = np.arange(p, dtype=np.int64)
    table[x * x % p] = 1
    table[0] = 0
    return table


def _char_sum_fp(coeffs, p, table):
    """sum over x in F_p of chi(sum c_i x^i); coefficients are ints."""
    x = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return int(table[acc].sum(dtype=np.int64))


def _char_sum_fp2(coeffs, p, table):
    """sum over z in F_{p^2} of chi_{p^2}(g(z)) for g with F_{p^2} coefficients.

    chi_{p^2}(w) = chi_p(Norm w); elements are c0 + c1 t with t^2 = s.
    Coefficients are (c0, c1) pairs.
    """
    s = smallest_nonresidue(p)
    total = 0
    rows = max(1, _CHUNK // p)
    c0 = np.arange(p, dtype=np.int64)
    for start in range(0, p, rows):
        c1 = np.arange(start, min(p, start + rows), dtype=np.int64)
        x0 = np.broadcast_to(c0[None, :], (len(c1), p))
        x1 = np.broadcast_to(c1[:, None], (len(c1), p))
        a0 = np.zeros((len(c1), p), dtype=np.int64)
        a1 = np.zeros((len(c1), p), dtype=np.int64)
        for k0, k1 in reversed(coeffs):
            # (a0 + a1 t)(x0 + x1 t) + (k0 + k1 t)
            n0 = (a0 * x0 + s * (a1 * x1 % p) + k0) % p
            n1 = (a0 * x1 + a1 * x0 + k1) % p
            a0, a1 = n0, n1
        norm = (a0 * a0 - s * (a1 * a1 % p)) % p
        total += int(table[norm].sum(dtype=np.int64))
    return total


def _as_pairs(coeffs):
    out = []
    for c in coeffs:
        if isinstance(c, int):
            out.append((c, 0))
        elif isinstance(c, tuple):
            out.append(c)
        else:
            out.append((c.c0, c.c1))
    return out


def _check_size(p, n):
    if p ** n > MAX_FIELD:
        raise TooLarge("counting over F_%d^%d is out of desk range" % (p, n))


def _count_sextic(G, p, n):
    """Projective points on Y^2 = G(X, Z) over F_{p^n}, G with F_p coefficients."""
    _check_size(p, n)
    table = _square_table(p)
    G = [int(c) % p for c in G]
    if n == 1:
        affine = p + _char_sum_fp(G, p, table)
        chi6 = int(table[G[6]])
    else:
        affine = p * p + _char_sum_fp2(_as_pairs(G), p, table)
        chi6 = 1 if G[6] else 0   # every element of F_p is a square in F_{p^2}
    return affine + 1 + chi6


def _count_cubic(C, p, n):
    """Points on y^2 = C(x, 1) plus the single point at infinity.

    ``C`` holds the four coefficients of a binary cubic (lowest X power
    first) over F_{p^2}; for n = 1 they must lie in F_p.
    """
    _check_size(p, n)
    table = _square_table(p)
    pairs = _as_pairs(C)
    if n == 1:
        if any(c1 % p for _, c1 in pairs):
            raise ValueError("cubic is not defined over F_p")
        return p + 1 + _char_sum_fp([c0 for c0, _ in pairs], p, table)
    return p * p + 1 + _char_sum_fp2(pairs, p, table)


def count_points(curve, n=1):
    """Number of F_{p^n}-points, n in {1, 2}.

    ``curve`` is a :class:`Genus2Curve`, a recovered sextic or an elliptic
    pair.  An elliptic pair counts as the one-point union E+ u E-: when
    both halves are defined over the counting field the total is
    N(E+) + N(E-) - 1, otherwise only the common point is rational.
    """
    if n not in (1, 2):
        raise ValueError("n must be 1 or 2")
    kind = getattr(curve, "kind", "genus2")
    p = curve.p
    if kind == "elliptic_pair":
        if n == 1 and not curve.split:
            return 1
        return (_count_cubic(curve.C_plus, p, n)
                + _count_cubic(curve.C_minus, p, n) - 1)
    G = curve.G if kind == "sextic" else curve.F
    return _count_sextic(G, p, n)


# --- Weil polynomials -----------------------------------------------------

@dataclass(frozen=True)
class WeilPoly:
    """P(T) = T^4 + c1 T^3 + c2 T^2 + p c1 T + p^2."""

    p: int
    c1: int
    c2: int

    def coefficients(self):
        """Coefficients from T^4 down to the constant term."""
        return [1, self.c1, self.c2, self.p * self.c1, self.p * self.p]

    def at(self, T):
        return sum(c * T ** (4 - i) for i, c in enumerate(self.coefficients()))

    def twist(self):
        return WeilPoly(self.p, -self.c1, self.c2)

    def within_weil_bounds(self):
        p = self.p
        bound = 4 * (isqrt(p) + 1)
        if abs(self.c1) > bound:
            return False
        # c2 lies between 2p + c1^2/4 and 2|c1| sqrt(p) - 2p
        if 4 * self.c2 > 8 * p + self.c1 * self.c1:
            return False
        lower = self.c2 + 2 * p
        return lower >= 0 and lower * lower >= 4 * self.c1 * self.c1 * p

    def to_json(self):
        return self.coefficients()

    def __str__(self):
        p, c1, c2 = self.p, self.c1, self.c2
        terms = ["T^4"]
        for c, mono in ((c1, "T^3"), (c2, "T^2"), (p * c1, "T")):
            if c:
                terms.append(("- " if c < 0 else "+ ") + "%d*%s" % (abs(c), mono))
        terms.append("+ %d" % (p * p))
        return " ".join(terms)


def weil_poly(N1, N2, p):
    s1 = p + 1 - N1
    s2 = p * p + 1 - N2
    if (s1 * s1 - s2) % 2:
        raise ParityError("counts %d, %d are not those of a genus-2 curve" % (N1, N2))
    return WeilPoly(p, -s1, (s1 * s1 - s2) // 2)


def weil_poly_of(curve):
    """Weil polynomial of a genus-2 curve, recovered sextic or elliptic pair."""
    p = curve.p
    if getattr(curve, "kind", None) == "elliptic_pair":
        return elliptic_pair_weil_poly(curve)
    return weil_poly(count_points(curve, 1), count_points(curve, 2), p)


def elliptic_pair_weil_poly(pair):
    """Characteristic polynomial of Frobenius on E+ x E-.

    Split case: product of the two elliptic factors over F_p.  Otherwise
    E- is the conjugate of E+ and the product is the Weil restriction,
    P(T) = T^4 - A T^2 + p^2 with A the trace of Frobenius of E+ over F_{p^2}.
    """
    p = pair.p
    if pair.split:
        a_plus = p + 1 - _count_cubic(pair.C_plus, p, 1)
        a_minus = p + 1 - _count_cubic(pair.C_minus, p, 1)
        return WeilPoly(p, -(a_plus + a_minus), 2 * p + a_plus * a_minus)
    A = p * p + 1 - _count_cubic(pair.C_plus, p, 2)
    return WeilPoly(p, 0, -A)


def twist_equiv(P_X, P_H):
    if P_X.p != P_H.p:
        return False
    return P_X.c2 == P_H.c2 and P_X.c1 in (P_H.c1, -P_H.c1)


# --- Igusa-Clebsch invariants -----------------------------------------------

def _partial(form, i, j):
    """d^(i+j) form / dX^i dZ^j; a form of degree n is [c_0..c_n], c_k the X^k Z^(n-k) coefficient."""
    out = list(form)
    for _ in range(i):
        out = [k * out[k] for k in range(1, len(out))]
    for _ in range(j):
        n = len(out) - 1
        out = [(n - k) * out[k] for k in range(len(out) - 1)]
    return out


def _mul_forms(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def transvectant(f, g, k):
    """The k-th transvectant (f, g)_k of binary forms given as coefficient lists."""
    m, n = len(f) - 1, len(g) - 1
    deg = m + n - 2 * k
    acc = [Fraction(0)] * (deg + 1)
    for i in range(k + 1):
        term = _mul_forms(_partial(f, k - i, i), _partial(g, i, k - i))
        sign = (-1) ** i * comb(k, i)
        for t, c in enumerate(term):
            acc[t] += sign * c
    scale = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    return [c * scale for c in acc]


def igusa_clebsch_rational(G):
    """(I2, I4, I6, I10) of a sextic with rational coefficients, via transvectants."""
    f = [Fraction(c) for c in G]
    i = transvectant(f, f, 4)
    delta = transvectant(i, i, 2)
    y1 = transvectant(f, i, 4)
    y2 = transvectant(i, y1, 2)
    y3 = transvectant(i, y2, 2)
    A = transvectant(f, f, 6)[0]
    B = transvectant(i, i, 4)[0]
    C = transvectant(i, delta, 4)[0]
    D = transvectant(y3, y1, 2)[0]
    I2 = -120 * A
    I4 = -720 * A ** 2 + 6750 * B
    I6 = 8640 * A ** 3 - 108000 * A * B + 202500 * C
    I10 = (-62208 * A ** 5 + 972000 * A ** 3 * B + 1620000 * A ** 2 * C
           - 3037500 * A * B ** 2 - 6075000 * B * C - 4556250 * D)
    return I2, I4, I6, I10


def igusa_clebsch(G, p):
    """Igusa-Clebsch invariants over F_p of Y^2 = G(X, Z).

    Computed over Q on the integer lift, then reduced; raises
    :class:`SingularCurve` when I10 vanishes mod p.
    """
    out = []
    for I in igusa_clebsch_rational([int(c) % p for c in G]):
        if I.denominator % p == 0:
            raise ZeroDivisionError("invariant denominator divisible by %d" % p)
        out.append(I.numerator * inv(I.denominator, p) % p)
    if out[3] == 0:
        raise SingularCurve("I10 = 0: the sextic has a repeated root")
    return tuple(out)


def absolute_invariants(G, p):
    """(I2^5/I10, I2^3 I4/I10, I2^2 I6/I10) over F_p."""
    I2, I4, I6, I10 = igusa_clebsch(G, p)
    d = inv(I10, p)
    return (pow(I2, 5, p) * d % p,
            pow(I2, 3, p) * I4 * d % p,
            I2 * I2 * I6 * d % p)


def same_invariants(G1, G2, p):
    """Equality of Igusa-Clebsch invariants as points of P(1, 2, 3, 5) over F_p-bar.

    Stronger than comparing the three absolute invariants, which lose
    information when I2 = 0.
    """
    I = igusa_clebsch(G1, p)
    J = igusa_clebsch(G2, p)
    w = (1, 2, 3, 5)
    for a in range(4):
        for b in range(a + 1, 4):
            lhs = pow(I[a], w[b], p) * pow(J[b], w[a], p) % p
            rhs = pow(J[a], w[b], p) * pow(I[b], w[a], p) % p
            if lhs != rhs:
                return False
    return True
