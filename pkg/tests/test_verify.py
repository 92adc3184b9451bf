import random
import time
from fractions import Fraction
from itertools import combinations, permutations

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from g2isogeny.curve import Genus2Curve
from g2isogeny.errors import ParityError, SingularCurve, TooLarge
from g2isogeny.field import QuadraticExtension, legendre
from g2isogeny.recovery import EllipticPair, SexticModel
from g2isogeny.verify import (WeilPoly, absolute_invariants, count_points, igusa_clebsch,
                              igusa_clebsch_rational, same_invariants, twist_equiv,
                              weil_poly, weil_poly_of)

from conftest import F, G_REF, P, WEIL_REF, random_curves


def brute_count(F, p, n):
    """Projective points on Y^2 = F(X, Z) by direct enumeration (no numpy)."""
    if n == 1:
        elems = list(range(p))
        zero = 0
        ev = lambda x: sum(c * pow(x, i, p) for i, c in enumerate(F)) % p
        is_sq = lambda v: legendre(v, p) == 1
    else:
        L = QuadraticExtension(p)
        elems = [L(a, b) for a in range(p) for b in range(p)]
        zero = L.zero
        ev = lambda x: sum((c * x ** i for i, c in enumerate(F)), zero)
        is_sq = lambda v: v.is_square()
    total = 0
    for x in elems:
        v = ev(x)
        total += 1 if v == zero else (2 if is_sq(v) else 0)
    lead = F[6] % p
    if lead == 0:
        total += 1
    elif n == 2 or legendre(lead, p) == 1:
        total += 2
    return total


def test_count_x6_minus_1(H13):
    # x^6 = 1 on the six residues (roots of f), x^6 = -1 on non-residues where
    # f = -2 is not a square, f(0) = -1 = 5^2: 6 + 0 + 2 affine points, 2 at infinity
    residues = [x for x in range(13) if legendre(x, 13) == 1]
    roots = [x for x in range(13) if (pow(x, 6, 13) - 1) % 13 == 0]
    square_values = [x for x in range(13) if legendre((pow(x, 6, 13) - 1) % 13, 13) == 1]
    assert roots == residues and square_values == [0]
    assert count_points(H13, 1) == 2 * len(square_values) + len(roots) + 2 == 10
    assert brute_count(H13.F, 13, 1) == 10


@pytest.mark.parametrize("seed", range(6))
def test_counts_match_enumeration(seed):
    H = random_curves(1, seed=seed, primes=(5, 7, 11, 13))[0]
    for n in (1, 2):
        assert count_points(H, n) == brute_count(H.F, H.p, n)


def test_reference_counts_and_weil_polynomial(H997):
    t0 = time.perf_counter()
    N1, N2 = count_points(H997, 1), count_points(H997, 2)
    assert time.perf_counter() - t0 < 60
    assert (N1, N2) == (967, 993157)
    W = weil_poly(N1, N2, P)
    assert W.coefficients() == list(WEIL_REF)
    assert W.p * W.c1 == -30907


def test_weil_poly_toys():
    W = weil_poly(14, 170, 13)
    assert (W.c1, W.c2) == (0, 0)
    with pytest.raises(ParityError):
        weil_poly(14, 171, 13)


def test_weil_bounds_on_random_curves():
    for H in random_curves(20, seed=9, primes=(13,)):
        W = weil_poly(count_points(H, 1), count_points(H, 2), 13)
        assert W.within_weil_bounds()
        assert abs(W.c1) <= 4 * 4
        # P(1) = #J(F_p) > 0 and P(-1) > 0
        assert W.at(1) > 0 and W.at(-1) > 0


def test_twist_equiv_examples():
    W = WeilPoly(P, -31, 54)
    assert twist_equiv(W.twist(), W)
    assert twist_equiv(W, W)
    assert not twist_equiv(WeilPoly(P, 0, 0), W)
    assert not twist_equiv(WeilPoly(13, -31, 54), W)


def test_twist_has_opposite_frobenius_trace():
    for H in random_curves(8, seed=12):
        p = H.p
        u = next(a for a in range(2, p) if legendre(a, p) == -1)
        T = Genus2Curve(p, tuple(u * c % p for c in H.F))
        assert weil_poly_of(T) == weil_poly_of(H).twist()
        assert same_invariants(T.F, H.F, p)


def _root_invariants(G):
    """I2, I4, I6, I10 from the complex roots of the sextic (classical root formulas)."""
    mpmath.mp.dps = 60
    a0 = mpmath.mpf(G[6])
    roots = mpmath.polyroots([G[k] for k in range(6, -1, -1)], maxsteps=200, extraprec=200)
    d = lambda i, j: (roots[i] - roots[j]) ** 2
    idx = range(6)
    # sums over the set partitions of the six roots, each partition counted once
    pairings = {frozenset(frozenset(pr) for pr in
                          [(s[0], s[1]), (s[2], s[3]), (s[4], s[5])]) for s in permutations(idx)}
    I2 = sum(d(*sorted(a)) * d(*sorted(b)) * d(*sorted(c))
             for a, b, c in (tuple(pr) for pr in pairings))
    # the 10 splits into two triples; with the 6 matchings between them, 60 terms for I6
    triples = {frozenset([frozenset(s[:3]), frozenset(s[3:])]) for s in permutations(idx)}
    I4 = 0
    for T in triples:
        A, B = (sorted(t) for t in T)
        term = 1
        for t in (A, B):
            for i, j in combinations(t, 2):
                term *= d(i, j)
        I4 += term
    I6 = 0
    for T in triples:
        A, B = (sorted(t) for t in T)
        for perm in permutations(B):
            # (12)(23)(31)(45)(56)(64)(14)(25)(36) with A = {1,2,3}, B = {4,5,6}
            term = 1
            for t in (A, B):
                for i, j in combinations(t, 2):
                    term *= d(i, j)
            for i, j in zip(A, perm):
                term *= d(i, j)
            I6 += term
    I10 = 1
    for i, j in combinations(idx, 2):
        I10 *= d(i, j)
    return (a0 ** 2 * I2, a0 ** 4 * I4, a0 ** 6 * I6, a0 ** 10 * I10)


@pytest.mark.parametrize("G", [
    (1, 0, 0, 0, 0, 0, 1),
    (3, -1, 4, 1, -5, 9, 2),
    (-2, 7, 1, 8, -2, 8, 1),
    (5, 0, 3, 0, -1, 1, 6),
])
def test_igusa_clebsch_against_root_formulas(G):
    exact = igusa_clebsch_rational(G)
    numeric = _root_invariants(G)
    for e, n in zip(exact, numeric):
        ref = mpmath.mpf(e.numerator) / e.denominator
        assert abs(mpmath.re(n) - ref) <= mpmath.mpf(10) ** -30 * max(1, abs(ref))
        assert abs(mpmath.im(n)) <= mpmath.mpf(10) ** -30 * max(1, abs(ref))


def test_igusa_clebsch_of_x6_minus_1_is_integral():
    I = igusa_clebsch_rational((-1, 0, 0, 0, 0, 0, 1))
    assert all(isinstance(x, Fraction) for x in I)
    assert I[3] != 0


def test_reversal_invariance():
    for H in random_curves(10, seed=5):
        try:
            absolute_invariants(H.F, H.p)
        except ZeroDivisionError:
            continue
        assert same_invariants(H.F, tuple(reversed(H.F)), H.p)


def _transform(G, M, u, p):
    """u^2 * G(a X + b Z, c X + d Z)."""
    a, b, c, d = M
    out = [0] * 7
    for k, g in enumerate(G):
        # (aX + bZ)^k (cX + dZ)^(6-k)
        term = [1]
        for _ in range(k):
            term = _mul_lin(term, b, a, p)
        for _ in range(6 - k):
            term = _mul_lin(term, d, c, p)
        for i, t in enumerate(term):
            out[i] = (out[i] + g * t) % p
    return tuple(u * u * c % p for c in out)


def _mul_lin(B, z, x, p):
    """B * (x X + z Z), coefficients indexed by the power of X."""
    out = [0] * (len(B) + 1)
    for i, c in enumerate(B):
        out[i] = (out[i] + c * z) % p
        out[i + 1] = (out[i + 1] + c * x) % p
    return out


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_gl2_covariance(seed):
    rng = random.Random(seed)
    H = random_curves(1, seed=seed, primes=(101, 997))[0]
    p = H.p
    while True:
        M = [rng.randrange(p) for _ in range(4)]
        if (M[0] * M[3] - M[1] * M[2]) % p:
            break
    u = rng.randrange(1, p)
    G2 = _transform(H.F, M, u, p)
    assert same_invariants(H.F, G2, p)


def test_invariants_distinguish_curves():
    H1, H2 = random_curves(2, seed=44, primes=(997,))
    assert not same_invariants(H1.F, H2.F, 997)


def test_reference_model_invariants(result997):
    assert same_invariants(result997.curve.G, G_REF, P)
    assert weil_poly_of(result997.curve) == weil_poly(967, 993157, P).twist()
    assert weil_poly_of(SexticModel(P, G_REF)).coefficients() == [1, 31, 54, 30907, 994009]


def test_singular_sextic_rejected():
    with pytest.raises(SingularCurve):
        igusa_clebsch((1, 2, 1, 0, 0, 0, 0), 13)


def test_counting_limit():
    with pytest.raises(TooLarge):
        count_points(Genus2Curve(65537, F), 2)


def _brute_cubic(coeffs, L, field, base=False):
    """Points on y^2 = cubic over ``field`` plus infinity; ``base`` means squares in F_p."""
    n = 1
    for x in field:
        v = sum((c * x ** i for i, c in enumerate(coeffs)), L.zero)
        if v == L.zero:
            n += 1
        elif base:
            n += 2 if legendre(v.to_int(), L.p) == 1 else 0
        else:
            n += 2 if v.is_square() else 0
    return n


def test_elliptic_pair_counts():
    p = 11
    L = QuadraticExtension(p)
    Fp2_elems = [L(a, b) for a in range(p) for b in range(p)]
    r = L.sqrt_of_base(2)    # 2 is a non-residue mod 11
    Cp = (L(1) + r, L(3), L(0), L(1))
    Cm = tuple(c.conjugate() for c in Cp)
    pair = EllipticPair(p, 2, Cp, Cm, (), (), False)
    assert count_points(pair, 1) == 1
    assert count_points(pair, 2) == 2 * _brute_cubic(Cp, L, Fp2_elems) - 1
    W = weil_poly_of(pair)
    assert W.c1 == 0
    A = p * p + 1 - _brute_cubic(Cp, L, Fp2_elems)
    assert W.c2 == -A
    # split: two F_p curves, the Weil polynomial is the product
    Cp = (L(1), L(3), L(0), L(1))
    Cm = (L(2), L(0), L(5), L(1))
    pair = EllipticPair(p, 4, Cp, Cm, (), (), True)
    Fp_elems = [L(a) for a in range(p)]
    np_, nm = _brute_cubic(Cp, L, Fp_elems, True), _brute_cubic(Cm, L, Fp_elems, True)
    ap, am = p + 1 - np_, p + 1 - nm
    W = weil_poly_of(pair)
    assert W.coefficients() == [1, -(ap + am), 2 * p + ap * am, -p * (ap + am), p * p]
    assert count_points(pair, 1) == np_ + nm - 1
