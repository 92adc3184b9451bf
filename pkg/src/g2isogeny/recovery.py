"""Double covers of a conic branched along its intersection with a cubic.

Given Q(V) = 0 and C(V) = 0 in P^2, the curve Y^2 = C restricted to the
conic is a genus-2 curve.  For a smooth conic we pull C back along a
rational parametrization P^1 -> Q and get a binary sextic.  A rank-2
conic is a pair of lines L+ and L- meeting at a node; then the cover
falls apart into two elliptic curves Y^2 = C restricted to each line,
glued over the node.
"""

from dataclasses import dataclass

from . import forms, linalg, poly
from .errors import Degenerate, RankTooLow, SingularConic
from .field import PrimeField, QuadraticExtension, inv, legendre, sqrt_mod


def conic_matrix(Q, p):
    """Symmetric matrix M with V^t M V = 2 Q(V); Q in the order (00, 01, 02, 11, 12, 22)."""
    q00, q01, q02, q11, q12, q22 = (c % p for c in Q)
    return [[2 * q00 % p, q01, q02],
            [q01, 2 * q11 % p, q12],
            [q02, q12, 2 * q22 % p]]


def is_singular(Q, p):
    return linalg.det(conic_matrix(Q, p), PrimeField(p)) == 0


def conic_value(Q, P, p):
    return forms.evaluate(forms.quadric(Q, p), P, p)


def polar(Q, P, R, p):
    """B(P, R) with Q(P + t R) = Q(P) + t B(P, R) + t^2 Q(R)."""
    M = conic_matrix(Q, p)
    acc = 0
    for i in range(3):
        for j in range(3):
            acc += P[i] * M[i][j] * R[j]
    return acc % p


def _normalize3(P, p):
    for c in P:
        if c % p:
            s = inv(c, p)
            return tuple(x * s % p for x in P)
    raise ValueError("zero vector")


def conic_points(Q, p):
    """Rational points of Q in a fixed order: slices V2 = 1 by V0 = 0, 1, ..., then V2 = 0."""
    q00, q01, q02, q11, q12, q22 = (c % p for c in Q)
    for x in range(p):
        # q11 y^2 + (q01 x + q12) y + (q00 x^2 + q02 x + q22) = 0
        A, B, C = q11, (q01 * x + q12) % p, (q00 * x * x + q02 * x + q22) % p
        for y in _solve_quadratic(A, B, C, p):
            yield _normalize3((x, y, 1), p)
    for y in _solve_quadratic(q11, q01, q00, p):
        yield (1, y, 0)
    if q11 == 0:
        yield (0, 1, 0)


def _solve_quadratic(A, B, C, p):
    if A == 0:
        if B == 0:
            return list(range(p)) if C == 0 else []
        return [-C * inv(B, p) % p]
    disc = (B * B - 4 * A * C) % p
    if legendre(disc, p) < 0:
        return []
    r = sqrt_mod(disc, p)
    h = inv(2 * A, p)
    return sorted({(-B + r) * h % p, (-B - r) * h % p})


def find_point_on_conic(Q, p, hint=None):
    """A rational point on a nonsingular conic; the hint wins when it lies on Q."""
    if is_singular(Q, p):
        raise SingularConic("the conic is singular")
    if hint is not None and any(c % p for c in hint) and conic_value(Q, hint, p) == 0:
        return _normalize3(hint, p)
    for P in conic_points(Q, p):
        return P
    raise AssertionError("a smooth conic over a finite field has rational points")


def parametrize_conic(Q, P, p):
    """Three binary quadratics (P0, P1, P2) parametrizing Q through P.

    Lines through P are joined to R(X, Z) = X e_i + Z e_j on the line
    V_k = 0, where k is the last coordinate with P_k != 0.  The second
    intersection is B(P, R) R - Q(R) P.
    """
    k = max(i for i in range(3) if P[i] % p)
    i, j = [m for m in range(3) if m != k]
    M = conic_matrix(Q, p)
    half = inv(2, p)
    # Q(R) = q_ii X^2 + q_ij X Z + q_jj Z^2, stored as [Z^2, XZ, X^2]
    QR = [M[j][j] * half % p, M[i][j], M[i][i] * half % p]
    # B(P, R) = X * (P M)_i + Z * (P M)_j, stored as [Z, X]
    PM = [sum(P[r] * M[r][c] for r in range(3)) % p for c in range(3)]
    B = [PM[j], PM[i]]
    R = {i: [0, 1], j: [1, 0], k: [0, 0]}
    out = []
    for m in range(3):
        BR = [B[0] * R[m][0] % p, (B[0] * R[m][1] + B[1] * R[m][0]) % p, B[1] * R[m][1] % p]
        out.append([(BR[t] - QR[t] * P[m]) % p for t in range(3)])
    return tuple(out)


@dataclass(frozen=True)
class SexticModel:
    """Y^2 = G(X, Z), G = (G_0 .. G_6) with G_i the X^i Z^(6-i) coefficient."""

    p: int
    G: tuple
    kind: str = "sextic"

    def to_json(self):
        return {"kind": "sextic", "G": list(self.G)}

    def __str__(self):
        from .curve import format_sextic
        return "Y^2 = " + format_sextic(self.G)


@dataclass(frozen=True)
class EllipticPair:
    """E+ : y^2 = C_plus(x, 1) and E- : y^2 = C_minus(x, 1), glued at infinity.

    Cubic coefficients are F_{p^2} elements (lowest X power first).
    ``split`` says whether delta, hence each curve, is defined over F_p.
    """

    p: int
    delta_sq: int
    C_plus: tuple
    C_minus: tuple
    L_plus: tuple
    L_minus: tuple
    split: bool
    kind: str = "elliptic_pair"

    def to_json(self):
        pair = lambda c: [c.c0, c.c1]
        return {"kind": "elliptic_pair", "delta_sq": self.delta_sq,
                "C_plus": [pair(c) for c in self.C_plus],
                "C_minus": [pair(c) for c in self.C_minus]}

    def __str__(self):
        return "E+: y^2 = %s;  E-: y^2 = %s  (delta^2 = %d)" % (
            forms.format_binary(list(self.C_plus), ("x", "1")),
            forms.format_binary(list(self.C_minus), ("x", "1")), self.delta_sq)


def sextic_from_json(obj, p):
    return SexticModel(p, tuple(int(c) % p for c in obj["G"]))


def _check_sextic(G, p):
    if G[6] == 0 and G[5] == 0:
        raise Degenerate("the branch locus has a repeated point at infinity")
    g = poly.trim(list(G))
    if not poly.is_squarefree(g, p):
        raise Degenerate("the branch locus Q n C has a repeated point")


def recover(Q, C, p, hint=None):
    """Genus-2 model from a conic Q (6 coefficients) and a cubic C (10 coefficients)."""
    Q = [c % p for c in Q]
    if is_singular(Q, p):
        return recover_split(Q, C, p)
    P = find_point_on_conic(Q, p, hint)
    return recover_smooth(Q, C, p, P)


def recover_smooth(Q, C, p, P):
    param = parametrize_conic(Q, P, p)
    G = forms.substitute(forms.cubic(C, p), list(param), p)
    G = tuple(c % p for c in G)
    _check_sextic(G, p)
    return SexticModel(p, G)


def recover_split(Q, C, p):
    K = PrimeField(p)
    T, D = linalg.diagonalize_symmetric(conic_matrix(Q, p), K)
    nonzero = [d for d in D if d]
    if len(nonzero) < 2:
        raise RankTooLow("the conic has rank %d" % len(nonzero))
    if len(nonzero) == 3:
        raise ValueError("conic is nonsingular; use recover_smooth")
    a, b = D[0], D[1]
    delta_sq = -a * inv(b, p) % p
    L = QuadraticExtension(p)
    delta = L.sqrt_of_base(delta_sq)
    split = legendre(delta_sq, p) == 1
    Tinv = _inverse3(T, K)
    cub = forms.cubic(C, p)
    node = [T[r][2] for r in range(3)]
    if forms.evaluate(cub, node, p) == 0:
        raise Degenerate("the cubic passes through the node of the conic")
    cubics = []
    lines = []
    for sgn in (1, -1):
        d = delta * sgn
        # V = Z (col0 + d col1) + X col2
        binaries = [[L(T[r][0]) + d * T[r][1], L(T[r][2])] for r in range(3)]
        Cs = [L(c) for c in forms.substitute(cub, binaries, p)]
        _check_cubic(Cs)
        cubics.append(tuple(Cs))
        lines.append(tuple(L(Tinv[1][m]) - d * Tinv[0][m] for m in range(3)))
    return EllipticPair(p, delta_sq, cubics[0], cubics[1], lines[0], lines[1], split)


def _check_cubic(Cs):
    """y^2 = Cs(x, 1) must be a smooth cubic: degree 3, distinct roots."""
    if Cs[3] == 0:
        raise Degenerate("the elliptic component is not a smooth cubic")
    # discriminant of c3 x^3 + c2 x^2 + c1 x + c0
    c0, c1, c2, c3 = Cs
    disc = (c1 * c1 * c2 * c2 - 4 * c0 * c2 ** 3 - 4 * c1 ** 3 * c3
            + 18 * c0 * c1 * c2 * c3 - 27 * c0 * c0 * c3 * c3)
    if disc == 0:
        raise Degenerate("the cubic meets a line of the conic twice at one point")


def _inverse3(T, K):
    n = len(T)
    aug = [list(T[i]) + [K.one if i == j else K.zero for j in range(n)] for i in range(n)]
    R, _ = linalg.rref(aug, K)
    return [row[n:] for row in R]


def product_of_lines(L1, L2):
    """Quadric coefficients (00, 01, 02, 11, 12, 22) of L1 * L2."""
    out = []
    for i, j in forms.QUAD_MONOMIALS:
        out.append(L1[i] * L2[i] if i == j else L1[i] * L2[j] + L1[j] * L2[i])
    return out
