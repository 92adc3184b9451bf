"""Walk through the (3,3)-isogeny over F_997 one stage at a time.

Run with ``python3 demos/walkthrough.py``.  Every intermediate object is
printed; the reference model of X at the top is another model of the
same curve, so only invariants are compared.
"""

from g2isogeny import forms, linalg
from g2isogeny.curve import Genus2Curve
from g2isogeny.field import PrimeField
from g2isogeny.isogeny import alternative_model, isogenous_curve
from g2isogeny.jacobian import MumfordPoint, build_subgroup
from g2isogeny.pairing import weil_pairing3
from g2isogeny.verify import count_points, igusa_clebsch, same_invariants, weil_poly, weil_poly_of

p = 997
H = Genus2Curve(p, (630, 503, 64, 363, 99, 113, 1))
D1 = MumfordPoint((208, 392, 1), (603, 579), 2)
D2 = MumfordPoint((527, 48, 1), (832, 918), 2)
reference_X = (474, 174, 35, 613, 183, 118, 0)


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("Curve and kernel")
print("H:", H)
print("D1 =", D1)
print("D2 =", D2)
S = build_subgroup(D1, D2, H)
print("S has %d elements; e_3(D1, D2) = %d" % (len(S.elements), weil_pairing3(D1, D2, H)))
print("one representative of each pair {e, -e}:")
for e in S.half_set:
    print("   ", e)

result = isogenous_curve(H, D1, D2)
prov = result.provenance

section("Secant points v_e (columns)")
for row in prov.matrix:
    print("   ", " ".join("%4d" % c for c in row))
print("rank:", linalg.rank([list(r) for r in prov.matrix], PrimeField(p)))

section("Projection to P^2")
for i, row in enumerate(prov.phi.nu):
    print("Phi_%d = %s" % (i, forms.format_binary(list(row))))

section("Conic and cubic")
print("Q =", forms.format_ternary(forms.quadric(prov.Q, p)))
print("C =", forms.format_ternary(forms.cubic(prov.C, p)))
print("rational point on Q:", prov.conic_point)

section("Recovered curve")
X = result.curve
print("X:", X)
# weighted-projective tuples: the raw values depend on the model
print("Igusa-Clebsch (X):        ", igusa_clebsch(X.G, p))
print("Igusa-Clebsch (reference):", igusa_clebsch(reference_X, p))
print("same absolute invariants:", same_invariants(X.G, reference_X, p))
alt = alternative_model(H, result)
if alt is not None:
    print("model from another Weierstrass point agrees:", same_invariants(alt.G, X.G, p))

section("Zeta functions")
N1, N2 = count_points(H, 1), count_points(H, 2)
W_H = weil_poly(N1, N2, p)
W_X = weil_poly_of(X)
print("#H(F_p) = %d, #H(F_p^2) = %d" % (N1, N2))
print("P_H(T) coefficients:", W_H.coefficients())
print("P_X(T) coefficients:", W_X.coefficients())
print("P_X(T) = P_H(-T):", W_X == W_H.twist())
