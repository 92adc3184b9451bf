"""The (3,3)-isogeny pipeline: kernel -> secant points -> projection -> conic and cubic -> X.

Outline for l = 3 and a kernel S = <D1, D2>:

1. pick one element from each +-pair of S - {0} (four classes);
2. intersect each secant line with the hyperplane sum F_i U_i = 0 in P^6;
3. the linear forms vanishing on those four points form a 4-dimensional
   space containing F itself; the rest of a basis gives Phi_0, Phi_1,
   Phi_2, sextics in (X, Z);
4. the six Weierstrass points map under (Phi_0 : Phi_1 : Phi_2) onto a
   conic Q and a cubic C meets Q exactly there;
5. X is the double cover of Q branched over Q n C.

Interpolating "through the Weierstrass images" is done modulo f(x), which
evaluates at all roots of f at once; a root at infinity (F_6 = 0)
contributes the value of the forms at (1 : 0).
"""

from dataclasses import dataclass

from . import forms, linalg, poly
from .curve import rational_weierstrass_points
from .errors import (FNotInKernel, KernelDimNotOne, KernelTooSmall,
                     NoValidCubic, NotIsotropic, RankUnexpected,
                     UnexpectedContainment)
from .field import PrimeField
from .jacobian import build_subgroup
from .pairing import is_isotropic
from .recovery import (conic_points, find_point_on_conic, is_singular,
                       parametrize_conic, recover_smooth, recover_split)
from .secant import CONTAINED, hyperplane_from_weierstrass, secant_intersection


@dataclass(frozen=True)
class ProjectionMaps:
    """Phi_i = sum_j nu[i][j] X^j Z^(2l - j) for i < 3; phi3 holds the hyperplane form."""

    ell: int
    nu: tuple
    phi3: tuple

    def to_json(self):
        return {"ell": self.ell, "nu": [list(r) for r in self.nu], "phi3": list(self.phi3)}


@dataclass(frozen=True)
class Provenance:
    half_set: tuple
    matrix: tuple
    phi: ProjectionMaps
    Q: tuple
    C: tuple
    conic_point: tuple = None
    parametrization: tuple = None

    def to_json(self):
        out = {
            "half_set": [e.to_json() for e in self.half_set],
            "v_e_matrix": [list(r) for r in self.matrix],
            "phi": self.phi.to_json(),
            "Q": list(self.Q),
            "C": list(self.C),
        }
        if self.conic_point is not None:
            out["conic_point"] = list(self.conic_point)
        if self.parametrization is not None:
            out["parametrization"] = [list(b) for b in self.parametrization]
        return out


@dataclass(frozen=True)
class IsogenyResult:
    curve: object
    provenance: Provenance


def secant_matrix(half_set, Hc, ell, p):
    """(2l+1) x |S^+-| matrix whose columns are the raw secant points."""
    cols = []
    for e in half_set:
        g = secant_intersection(e, Hc, ell, p)
        if g is CONTAINED:
            raise UnexpectedContainment("Secant(%s) lies in the hyperplane" % (e,))
        cols.append(list(g))
    return [list(r) for r in zip(*cols)]


def _projection_from_matrix(M, Hc, ell, p):
    K = PrimeField(p)
    n = 2 * ell
    r = linalg.rank(M, K)
    if r != n - 3:
        raise RankUnexpected("secant matrix has rank %d, expected %d" % (r, n - 3))
    if any(linalg.vecmat(Hc, M, K)):
        raise FNotInKernel("the hyperplane form does not vanish on the secant points")
    basis = linalg.left_nullspace(M, K)
    _, pivots = linalg.rref(basis, K)
    # Hc = sum of Hc[pivot] * row; drop the first row that Hc actually uses
    drop = next(k for k, c in enumerate(pivots) if Hc[c] % p)
    nu = tuple(tuple(row) for k, row in enumerate(basis) if k != drop)
    return ProjectionMaps(ell, nu, tuple(c % p for c in Hc))


def phi_maps(H, S):
    """Projection maps for l = 3 from a kernel subgroup (or a bare half-set)."""
    half = S.half_set if hasattr(S, "half_set") else tuple(S)
    return general_ell_projection(H, half, (1,), 3)


def general_ell_projection(H, half_set, alpha, ell):
    """Projection maps for the hyperplane sum alpha_i W_i of P^(2l)."""
    p = H.p
    if not any(a % p for a in alpha):
        raise ValueError("alpha must be nonzero")
    Hc = hyperplane_from_weierstrass(alpha, H.F, ell, p)
    M = secant_matrix(half_set, Hc, ell, p)
    return _projection_from_matrix(M, Hc, ell, p)


def _relation_rows(phi, H, monomials):
    """Rows of values of prod Phi_i over the Weierstrass points, one per monomial."""
    p, f = H.p, H.f
    n = 2 * phi.ell
    base = [poly.trim(list(r)) for r in phi.nu]
    rows = []
    for mono in monomials:
        prod = [1]
        top = 1
        for i in mono:
            prod = poly.mul(prod, base[i], p)
            top = top * phi.nu[i][n] % p
        r = poly.mod(prod, f, p)
        r = r + [0] * (poly.degree(f) - len(r))
        if H.F[6] == 0:
            r.append(top)
        rows.append(r)
    return rows


def interpolate_conic(phi, H):
    """The unique conic through the images of the six Weierstrass points."""
    K = PrimeField(H.p)
    rows = _relation_rows(phi, H, forms.QUAD_MONOMIALS)
    ker = linalg.left_nullspace(rows, K)
    if len(ker) != 1:
        raise KernelDimNotOne("conic relations form a space of dimension %d" % len(ker))
    return tuple(ker[0])


def interpolate_cubic(phi, H, Q):
    """A cubic through the Weierstrass images, not a multiple of Q."""
    p = H.p
    K = PrimeField(p)
    rows = _relation_rows(phi, H, forms.CUBIC_MONOMIALS)
    ker = linalg.left_nullspace(rows, K)
    if len(ker) < 4:
        raise KernelTooSmall("cubic relations form a space of dimension %d" % len(ker))
    qf = forms.quadric(Q, p)
    multiples = [forms.to_vector(forms.mul(forms.linear(i), qf, p), forms.CUBIC_MONOMIALS)
                 for i in range(3)]
    mrows, mpiv = linalg.rref(multiples, K)
    rem = [linalg.reduce_modulo(v, mrows, mpiv, K) for v in ker]
    rem = [v for v in rem if any(v)]
    if not rem:
        raise NoValidCubic("every cubic through the points is a multiple of Q")
    C = tuple(linalg.rref(rem, K)[0][0])
    if forms.divides(qf, forms.cubic(C, p), p):
        raise NoValidCubic("selected cubic is divisible by Q")
    return C


def weierstrass_hint(phi, H):
    """Image of the first rational Weierstrass point, or None."""
    p = H.p
    n = 2 * phi.ell
    for P in rational_weierstrass_points(H):
        if P.Z == 0:
            img = tuple(row[n] for row in phi.nu)
        else:
            img = tuple(poly.evaluate(poly.trim(list(row)), P.X, p) for row in phi.nu)
        if any(img):
            return img
    return None


def isogenous_curve(H, D1, D2, conic_point=None, check_isotropy=True):
    """Run the whole l = 3 pipeline; returns an :class:`IsogenyResult`.

    The secant construction does not notice a kernel on which the Weil
    pairing is nontrivial (it often still returns some curve), so by default
    the pairing is checked first whenever it can be evaluated.
    """
    S = build_subgroup(D1, D2, H)
    if check_isotropy and is_isotropic(S.generators[0], S.generators[1], H) is False:
        raise NotIsotropic("the Weil pairing is nontrivial on <D1, D2>")
    return isogenous_curve_from_half_set(H, S.half_set, conic_point)


def isogenous_curve_from_half_set(H, half_set, conic_point=None):
    p = H.p
    phi = phi_maps(H, half_set)
    Q = interpolate_conic(phi, H)
    C = interpolate_cubic(phi, H, Q)
    M = secant_matrix(half_set, H.F, 3, p)
    if is_singular(Q, p):
        X = recover_split(Q, C, p)
        prov = Provenance(tuple(half_set), tuple(map(tuple, M)), phi, Q, C)
        return IsogenyResult(X, prov)
    hint = conic_point if conic_point is not None else weierstrass_hint(phi, H)
    P = find_point_on_conic(Q, p, hint)
    X = recover_smooth(Q, C, p, P)
    prov = Provenance(tuple(half_set), tuple(map(tuple, M)), phi, Q, C, P,
                      parametrize_conic(Q, P, p))
    return IsogenyResult(X, prov)


def alternative_model(H, result):
    """Recompute X from the same Q and C through a different conic point.

    Used as an internal consistency check: both models must have the same
    Igusa-Clebsch invariants.  Returns None for elliptic pairs.
    """
    prov = result.provenance
    if prov.conic_point is None:
        return None
    for P in conic_points(prov.Q, H.p):
        if P != prov.conic_point:
            return recover_smooth(prov.Q, prov.C, H.p, P)
    return None
