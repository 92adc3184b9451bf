"""Shared fixtures: the F_997 reference instance and small helper curves.

Constants below describe a reference instance over F_997: curve, kernel
generators, half-set, secant matrix, projection rows, conic, cubic, conic
parametrization, final model and Weil polynomial.
"""

import json
import random

import pytest

from g2isogeny import forms, linalg, poly
from g2isogeny.curve import Genus2Curve, infinity_points, lift_x
from g2isogeny.errors import NotSquarefree
from g2isogeny.field import PrimeField, QuadraticExtension, smallest_nonresidue
from g2isogeny.jacobian import MumfordPoint, from_points, random_element
from g2isogeny.recovery import product_of_lines

P = 997
F = (630, 503, 64, 363, 99, 113, 1)
D1 = MumfordPoint((208, 392, 1), (603, 579), 2)
D2 = MumfordPoint((527, 48, 1), (832, 918), 2)

# the four +-classes of S - {0}, as (a, b) with a monic quadratic
HALF_SET = [
    ((208, 392, 1), (603, 579)),
    ((527, 48, 1), (832, 918)),
    ((880, 428, 1), (901, 252)),
    ((292, 348, 1), (269, 596)),
]

SECANT_MATRIX = [
    [234, 319, 906, 896],
    [780, 16, 29, 754],
    [500, 565, 703, 398],
    [680, 329, 823, 248],
    [324, 68, 779, 868],
    [742, 416, 468, 392],
    [664, 395, 698, 952],
]

# Phi_i as coefficient rows of X^j Z^(6-j), j = 0..6
PHI_ROWS = [
    (0, 1, 0, 0, 549, 742, 121),
    (0, 0, 1, 0, 332, 642, 285),
    (0, 0, 0, 1, 454, 701, 889),
]

# order (00, 01, 02, 11, 12, 22)
Q_REF = (1, 52, 548, 361, 715, 296)
# order (000, 001, 002, 011, 012, 022, 111, 112, 122, 222)
C_REF = (1, 0, 0, 0, 149, 885, 167, 836, 538, 294)

# binary quadratics as [Z^2, XZ, X^2] coefficients
PARAM_REF = ([109, 781, 36], [17, 865, 80], [636, 945, 996])
CONIC_POINT_REF = (-36 % P, -80 % P, 1)
WEIERSTRASS_X_REF = -76 % P

G_REF = (474, 174, 35, 613, 183, 118, 0)
WEIL_REF = (1, -31, 54, -30907, 994009)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def H997():
    return Genus2Curve(P, F)


@pytest.fixture(scope="session")
def result997(H997):
    from g2isogeny.isogeny import isogenous_curve
    return isogenous_curve(H997, D1, D2)


SCAN_ARGS = {"pmin": 11, "pmax": 200, "count": 8, "seed": 3}


@pytest.fixture(scope="session")
def scan_doc(tmp_path_factory):
    """One seeded scan through the command-line entry point, shared by all tests."""
    from g2isogeny.cli import main
    out = tmp_path_factory.mktemp("scan") / "scan.json"
    argv = ["scan"] + [x for k, v in SCAN_ARGS.items() for x in ("--" + k, str(v))]
    code = main(argv + ["--out", str(out)])
    with open(out) as fh:
        doc = json.load(fh)
    doc["exit_code"] = code
    return doc


@pytest.fixture(scope="session")
def H13():
    """y^2 = x^6 - 1 over F_13."""
    return Genus2Curve(13, (12, 0, 0, 0, 0, 0, 1))


def random_curves(count, seed, primes=(11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                                       61, 67, 71, 73, 79, 83, 89, 97), f6_zero_every=4):
    """Deterministic list of random squarefree genus-2 curves."""
    rng = random.Random(seed)
    out = []
    k = 0
    while len(out) < count:
        p = rng.choice(primes)
        Fs = [rng.randrange(p) for _ in range(7)]
        if f6_zero_every and k % f6_zero_every == f6_zero_every - 1:
            Fs[6] = 0
        k += 1
        try:
            out.append(Genus2Curve(p, tuple(Fs)))
        except NotSquarefree:
            continue
    return out


def mixed_element(H, rng):
    """A random class, sometimes supported at infinity (deg a < d)."""
    if rng.random() < 0.6:
        return random_element(H, rng)
    pool = [pt for x in range(H.p) for pt in lift_x(H, x)]
    inf = [pt for pt in infinity_points(H) if isinstance(pt.Y, int)]
    pool += inf * max(1, len(pool) // 8)
    return from_points(rng.choice(pool), rng.choice(pool), H)


def secant_instance(case, ell, p, rng, contained=False):
    """A random (e, hyperplane) pair of the given secant shape.

    case 1: a = 1, d = 2; case 2: deg a = 1; case 3: deg a = 2 with
    distinct roots (split or not); case 4: a double root.  With
    ``contained`` the hyperplane is forced to contain the secant line.
    """
    n = 2 * ell
    Hc = [rng.randrange(p) for _ in range(n + 1)]
    if case == 1:
        a = (1,)
        if contained:
            Hc[n] = Hc[n - 1] = 0
    elif case == 2:
        alpha = rng.randrange(p)
        a = (-alpha % p, 1)
        if contained:
            # h(alpha) = 0 and H_n = 0: h = (x - alpha) * g, deg g <= n - 2
            g = [rng.randrange(p) for _ in range(n - 1)]
            Hc = poly.mul([-alpha % p, 1], g, p)
    elif case == 3:
        while True:
            a = (rng.randrange(p), rng.randrange(p), 1)
            if (a[1] * a[1] - 4 * a[0]) % p:
                break
    else:
        alpha = rng.randrange(p)
        a = tuple(poly.mul([-alpha % p, 1], [-alpha % p, 1], p))
    if contained and case in (3, 4):
        g = [rng.randrange(p) for _ in range(n - 1)]
        Hc = poly.mul(list(a), g, p)
    Hc = list(Hc) + [0] * (n + 1 - len(Hc))
    if not any(Hc):
        Hc[0] = 1
    return MumfordPoint(a, (), 2), Hc


def random_conic(p, rng, singular=False):
    """Q(V) = (V T) D (V T)^t for a random invertible T; rank 3, or rank 2 when singular."""
    K = PrimeField(p)
    while True:
        T = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
        if linalg.det(T, K):
            break
    d = [rng.randrange(1, p) for _ in range(3)]
    if singular:
        d[2] = 0
    out = []
    for i, j in forms.QUAD_MONOMIALS:
        s = sum(d[k] * T[i][k] * T[j][k] for k in range(3))
        out.append(s % p if i == j else 2 * s % p)
    return tuple(out)


def random_split_conic(p, rng, rational_lines):
    """A rank-2 conic as a product of two lines, rational or Galois-conjugate."""
    L = QuadraticExtension(p)
    while True:
        u = [rng.randrange(p) for _ in range(3)]
        v = [rng.randrange(p) for _ in range(3)]
        if linalg.rank([u, v], PrimeField(p)) == 2:
            break
    if rational_lines:
        return tuple(c % p for c in product_of_lines(u, v))
    n = smallest_nonresidue(p)
    r = L.sqrt_of_base(n)
    l1 = [L(a) + r * b for a, b in zip(u, v)]
    l2 = [L(a) - r * b for a, b in zip(u, v)]
    return tuple(c.to_int() for c in product_of_lines(l1, l2))
