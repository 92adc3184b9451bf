"""Genus-2 curves Y^2 = F(X, Z) = sum F_i X^i Z^(6-i) in weighted P(1,3,1)."""

from dataclasses import dataclass, field

from . import poly
from .forms import format_binary
from .errors import NotSquarefree
from .field import Fp2, PrimeField, QuadraticExtension, legendre, sqrt_mod


@dataclass(frozen=True)
class Genus2Curve:
    p: int
    F: tuple
    K: PrimeField = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        K = PrimeField(self.p)
        F = tuple(int(c) % self.p for c in self.F)
        if len(F) != 7:
            raise ValueError("sextic needs 7 coefficients, got %d" % len(F))
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "K", K)
        if F[6] == 0 and F[5] == 0:
            raise NotSquarefree("F_6 = F_5 = 0: repeated root at infinity")
        if not poly.is_squarefree(self.f, self.p):
            raise NotSquarefree("F(x, 1) has a repeated root")

    @property
    def f(self):
        """The affine polynomial f(x) = F(x, 1)."""
        return poly.trim(self.F)

    @property
    def two_points_at_infinity(self):
        return self.F[6] != 0

    def ext(self):
        return QuadraticExtension(self.p)

    def to_json(self):
        return {"p": self.p, "F": list(self.F)}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["p"]), tuple(int(c) for c in obj["F"]))

    def __str__(self):
        return "Y^2 = " + format_sextic(self.F)


def format_sextic(G, var=("X", "Z")):
    """Display a binary sextic the way it is usually printed, highest X power first."""
    return format_binary(list(G), var)


@dataclass(frozen=True)
class CurvePoint:
    """(X : Y : Z) with Z in {0, 1} and X = 1 when Z = 0.

    Coordinates are ints (F_p) or :class:`Fp2` elements.
    """

    X: object
    Y: object
    Z: object

    def involution(self, p):
        if isinstance(self.Y, Fp2):
            return CurvePoint(self.X, -self.Y, self.Z)
        return CurvePoint(self.X, -self.Y % p, self.Z)

    @property
    def at_infinity(self):
        return self.Z == 0


def _lift(c, L):
    return c if isinstance(c, Fp2) else L(c)


def is_on_curve(P, H):
    """Y^2 == F(X, Z), evaluated in F_{p^2} so both kinds of point work."""
    L = QuadraticExtension(H.p)
    X, Y, Z = (_lift(c, L) for c in (P.X, P.Y, P.Z))
    if X == 0 and Z == 0:
        return False
    rhs = L.zero
    for i, c in enumerate(H.F):
        rhs = rhs + c * X ** i * Z ** (6 - i)
    return Y * Y == rhs


def infinity_points(H):
    """The points (1 : ±sqrt(F_6) : 0); a doubled (1:0:0) when F_6 = 0."""
    p, F6 = H.p, H.F[6]
    if F6 == 0:
        pt = CurvePoint(1, 0, 0)
        return [pt, pt]
    if legendre(F6, p) == 1:
        s = sqrt_mod(F6, p)
        return [CurvePoint(1, s, 0), CurvePoint(1, -s % p, 0)]
    L = QuadraticExtension(p)
    s = L.sqrt_of_base(F6)
    return [CurvePoint(L.one, s, L.zero), CurvePoint(L.one, -s, L.zero)]


@dataclass(frozen=True)
class WeierstrassPlace:
    """A Galois orbit of Weierstrass points.

    ``roots`` holds the explicit projective roots (x, z) when they lie in
    F_p or F_{p^2}; otherwise ``factor`` is the monic irreducible factor of
    f cutting the orbit out and ``roots`` is empty.
    """

    factor: tuple
    roots: tuple

    @property
    def size(self):
        return 1 if self.factor == () else len(self.factor) - 1


def weierstrass_divisor(H):
    """The six projective roots of F, grouped into Galois orbits.

    Roots in F_p and F_{p^2} are explicit; orbits of size >= 3 are kept as
    their defining factor.  When F_6 = 0 the root (1 : 0) is included.
    """
    p = H.p
    L = QuadraticExtension(p)
    places = []
    if H.F[6] == 0:
        places.append(WeierstrassPlace((), ((1, 0),)))
    for g in poly.factor_squarefree(H.f, p):
        d = poly.degree(g)
        if d == 1:
            places.append(WeierstrassPlace(tuple(g), ((-g[0] % p, 1),)))
        elif d == 2:
            disc = (g[1] * g[1] - 4 * g[0]) % p
            r = L.sqrt_of_base(disc)
            half = L((p + 1) // 2)
            x1 = (L(-g[1]) + r) * half
            x2 = (L(-g[1]) - r) * half
            places.append(WeierstrassPlace(tuple(g), ((x1, L.one), (x2, L.one))))
        else:
            places.append(WeierstrassPlace(tuple(g), ()))
    return places


def rational_weierstrass_points(H):
    """Weierstrass points defined over F_p, as CurvePoints (affine ones ascending)."""
    pts = [CurvePoint(x, 0, 1) for x in poly.roots(H.f, H.p)]
    if H.F[6] == 0:
        pts.append(CurvePoint(1, 0, 0))
    return pts


def lift_x(H, x):
    """Rational points with X = x, Z = 1 (zero, one or two of them)."""
    p = H.p
    y2 = poly.evaluate(H.f, x % p, p)
    if legendre(y2, p) < 0:
        return []
    y = sqrt_mod(y2, p)
    if y == 0:
        return [CurvePoint(x % p, 0, 1)]
    return [CurvePoint(x % p, y, 1), CurvePoint(x % p, p - y, 1)]
