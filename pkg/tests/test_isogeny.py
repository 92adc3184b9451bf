import random
import time

import pytest

from g2isogeny import forms, linalg, poly
from g2isogeny.curve import Genus2Curve
from g2isogeny.errors import (IsogenyError, NotIsotropic, PipelineError,
                              RankUnexpected, SecantError, UnexpectedContainment)
from g2isogeny.field import PrimeField
from g2isogeny.isogeny import (ProjectionMaps, _relation_rows, alternative_model,
                               general_ell_projection, interpolate_conic, interpolate_cubic,
                               isogenous_curve, isogenous_curve_from_half_set, phi_maps,
                               secant_matrix, weierstrass_hint)
from g2isogeny.jacobian import MumfordPoint, add, build_subgroup, validate
from g2isogeny.pairing import is_isotropic
from g2isogeny.recovery import SexticModel, conic_matrix, recover
from g2isogeny.secant import gamma_vector, normalize_point
from g2isogeny.verify import (count_points, same_invariants, twist_equiv, weil_poly,
                              weil_poly_of)

from conftest import (C_REF, CONIC_POINT_REF, D1, D2, F, G_REF, P, PHI_ROWS, Q_REF,
                      WEIERSTRASS_X_REF)

K = PrimeField(P)
REF_PHI = ProjectionMaps(3, tuple(PHI_ROWS), F)


def test_projection_rows_reproduce_reference(H997):
    phi = phi_maps(H997, build_subgroup(D1, D2, H997))
    assert [list(r) for r in phi.nu] == [list(r) for r in PHI_ROWS]
    assert phi.phi3 == F


def test_reference_rows_annihilate_secant_points(H997):
    S = build_subgroup(D1, D2, H997)
    for e in S.half_set:
        v = gamma_vector(e, H997)
        for row in PHI_ROWS + [F]:
            assert sum(a * b for a, b in zip(row, v)) % P == 0


def test_reference_rows_span_the_kernel(H997):
    S = build_subgroup(D1, D2, H997)
    M = secant_matrix(S.half_set, F, 3, P)
    kernel = linalg.left_nullspace(M, K)
    assert len(kernel) == 4
    assert linalg.rank(kernel + [list(r) for r in PHI_ROWS] + [list(F)], K) == 4


def test_general_projection_agrees_for_ell_three(H997):
    S = build_subgroup(D1, D2, H997)
    assert general_ell_projection(H997, S.half_set, (1,), 3) == phi_maps(H997, S)


def test_ell_five_with_random_hyperplane_rejected(H997):
    S = build_subgroup(D1, D2, H997)
    rng = random.Random(1)
    for _ in range(5):
        alpha = [rng.randrange(P) for _ in range(5)]
        with pytest.raises((RankUnexpected, UnexpectedContainment)):
            general_ell_projection(H997, S.half_set, alpha, 5)


def test_two_torsion_in_half_set_rejected(H997):
    S = build_subgroup(D1, D2, H997)
    quad = next(g for g in poly.factor_squarefree(H997.f, P) if poly.degree(g) == 2)
    bad = MumfordPoint(tuple(quad), (), 2)
    validate(bad, H997)
    assert add(bad, bad, H997).is_identity
    with pytest.raises((UnexpectedContainment, RankUnexpected)):
        isogenous_curve_from_half_set(H997, S.half_set[:3] + (bad,))


def test_conic_from_reference_rows(H997):
    assert interpolate_conic(REF_PHI, H997) == Q_REF


def _vanishes_mod_f(form, phi, H):
    binaries = [list(r) for r in phi.nu]
    G = forms.substitute(form, binaries, H.p)
    # G is a binary form of degree 12 or 18 in (X, Z); reduce G(x, 1) mod f
    ok = poly.mod(poly.trim(list(G)), H.f, H.p) == []
    if H.F[6] == 0:
        ok = ok and G[-1] % H.p == 0
    return ok


def test_reference_cubic_lies_in_kernel(H997):
    rows = _relation_rows(REF_PHI, H997, forms.CUBIC_MONOMIALS)
    assert not any(linalg.vecmat(list(C_REF), rows, K))
    assert _vanishes_mod_f(forms.cubic(C_REF, P), REF_PHI, H997)
    assert _vanishes_mod_f(forms.quadric(Q_REF, P), REF_PHI, H997)
    assert len(linalg.left_nullspace(rows, K)) == 4


def test_chosen_cubic_matches_reference_modulo_conic(H997):
    C = interpolate_cubic(REF_PHI, H997, Q_REF)
    q = forms.quadric(Q_REF, P)
    multiples = [forms.to_vector(forms.mul(forms.linear(i), q, P), forms.CUBIC_MONOMIALS)
                 for i in range(3)]
    # C and C_REF agree up to a scalar modulo V_i Q
    assert linalg.rank(multiples + [list(C), list(C_REF)], K) == 4
    assert not forms.divides(q, forms.cubic(C, P), P)


def test_weierstrass_hint(H997):
    phi = phi_maps(H997, build_subgroup(D1, D2, H997))
    assert WEIERSTRASS_X_REF in poly.roots(H997.f, P)
    hint = weierstrass_hint(phi, H997)
    img = [poly.evaluate(list(r), WEIERSTRASS_X_REF, P) for r in phi.nu]
    assert hint is not None
    s = pow(img[2], -1, P)
    assert tuple(c * s % P for c in img) == CONIC_POINT_REF


def test_end_to_end_reference(H997):
    t0 = time.perf_counter()
    result = isogenous_curve(H997, D1, D2)
    assert time.perf_counter() - t0 < 1.0
    X = result.curve
    assert isinstance(X, SexticModel)
    assert same_invariants(X.G, G_REF, P)
    assert result.provenance.Q == Q_REF
    assert normalize_point(result.provenance.conic_point, P) == normalize_point(CONIC_POINT_REF, P)
    alt = alternative_model(H997, result)
    assert alt is not None and alt.G != X.G
    assert same_invariants(alt.G, X.G, P)


def test_reference_kernel_is_isotropic(H997):
    assert is_isotropic(D1, D2, H997) is True


def test_invalid_kernel_gives_structured_error(H997):
    with pytest.raises(IsogenyError) as info:
        isogenous_curve(H997, D1, D1)
    doc = info.value.to_json()
    assert doc["status"] == "error" and doc["code"] == "GeneratorsDependent"
    assert info.value.exit_code == 3


def test_scanned_instances_satisfy_interpolation_invariants(scan_doc):
    assert scan_doc["instances"]
    for inst in scan_doc["instances"]:
        H = Genus2Curve.from_json(inst["curve"])
        Da, Db = (MumfordPoint.from_json(g) for g in inst["generators"])
        S = build_subgroup(Da, Db, H)
        phi = phi_maps(H, S)
        Q = interpolate_conic(phi, H)
        C = interpolate_cubic(phi, H, Q)
        Kp = PrimeField(H.p)
        assert len(linalg.left_nullspace(_relation_rows(phi, H, forms.QUAD_MONOMIALS), Kp)) == 1
        assert len(linalg.left_nullspace(_relation_rows(phi, H, forms.CUBIC_MONOMIALS), Kp)) == 4
        assert _vanishes_mod_f(forms.quadric(Q, H.p), phi, H)
        assert _vanishes_mod_f(forms.cubic(C, H.p), phi, H)
        assert not forms.divides(forms.quadric(Q, H.p), forms.cubic(C, H.p), H.p)


def test_non_isotropic_kernels_are_refused(scan_doc):
    """Without the pairing check such kernels still produce a curve, but a wrong one."""
    refused = [f for f in scan_doc["failures"] if f["code"] == "NotIsotropic"]
    assert refused
    for f in refused:
        H = Genus2Curve.from_json(f["job"]["curve"])
        assert H.p % 3 == 1
        Da, Db = (MumfordPoint.from_json(g) for g in f["job"]["generators"])
        with pytest.raises(NotIsotropic):
            isogenous_curve(H, Da, Db)
        try:
            X = isogenous_curve(H, Da, Db, check_isotropy=False).curve
        except (PipelineError, SecantError):
            continue
        W_H = weil_poly(count_points(H, 1), count_points(H, 2), H.p)
        assert not twist_equiv(weil_poly_of(X), W_H)


def test_change_of_projection_basis_gives_same_curve(scan_doc, H997):
    """A random invertible change of the nu rows moves Q and C but not the isomorphism class of X."""
    rng = random.Random(31)
    cases = [(H997, D1, D2)]
    for inst in scan_doc["instances"]:
        H = Genus2Curve.from_json(inst["curve"])
        cases.append((H,) + tuple(MumfordPoint.from_json(g) for g in inst["generators"]))
    for H, Da, Db in cases:
        p = H.p
        Kp = PrimeField(p)
        phi = phi_maps(H, build_subgroup(Da, Db, H))
        base_Q = interpolate_conic(phi, H)
        base = recover(base_Q, interpolate_cubic(phi, H, base_Q), p)
        for _ in range(3):
            while True:
                M = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
                if linalg.det(M, Kp):
                    break
            nu = tuple(tuple(sum(M[i][k] * phi.nu[k][j] for k in range(3)) % p
                             for j in range(len(phi.nu[0]))) for i in range(3))
            moved = ProjectionMaps(phi.ell, nu, phi.phi3)
            Q = interpolate_conic(moved, H)
            assert (linalg.rank(conic_matrix(Q, p), Kp)
                    == linalg.rank(conic_matrix(base_Q, p), Kp))
            X = recover(Q, interpolate_cubic(moved, H, Q), p)
            assert X.kind == base.kind
            if X.kind == "sextic":
                assert same_invariants(X.G, base.G, p)
            else:
                assert weil_poly_of(X) == weil_poly_of(base)


def test_pipeline_is_deterministic(H997):
    a = isogenous_curve(H997, D1, D2)
    b = isogenous_curve(H997, D1, D2)
    assert a.curve.to_json() == b.curve.to_json()
    assert a.provenance.to_json() == b.provenance.to_json()
