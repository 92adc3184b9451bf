"""Why the kernel must be isotropic for the Weil pairing.

Over F_p with p = 1 mod 3 a curve can have all of Jac[3] rational, and
then a random pair of independent 3-torsion classes usually spans a
subgroup on which e_3 is nontrivial.  The secant matrix still has the
expected rank, so nothing in the linear algebra flags the problem right
away: later stages either fail or hand back a curve that is not
isogenous to H.  The library therefore refuses such kernels unless
asked not to.
"""

import random

from g2isogeny.errors import IsogenyError
from g2isogeny.isogeny import isogenous_curve
from g2isogeny.jacobian import IDENTITY, add, scalar_mul
from g2isogeny.pairing import weil_pairing3
from g2isogeny.scan import random_curve, three_torsion_pair
from g2isogeny.verify import count_points, twist_equiv, weil_poly, weil_poly_of

rng = random.Random(12)
shown = {True: 0, False: 0}
while min(shown.values()) < 2:
    p = rng.choice([13, 19, 31, 37, 43])
    H = random_curve(p, rng)
    W = weil_poly(count_points(H, 1), count_points(H, 2), p)
    if W.at(1) % 9:
        continue
    pair = three_torsion_pair(H, W.at(1), rng)
    if pair is None:
        continue
    A, B = pair
    e = weil_pairing3(A, B, H)
    isotropic = e == 1
    if shown[isotropic] >= 2:
        continue
    shown[isotropic] += 1
    assert scalar_mul(3, A, H) == IDENTITY and add(A, B, H) != IDENTITY
    print("p = %d, H: %s" % (p, H))
    print("  e_3(A, B) = %d (%s)" % (e, "isotropic" if isotropic else "not isotropic"))
    try:
        isogenous_curve(H, A, B)
        print("  checked run: accepted")
    except IsogenyError as exc:
        print("  checked run: refused with %s" % exc.code)
    try:
        X = isogenous_curve(H, A, B, check_isotropy=False).curve
    except IsogenyError as exc:
        print("  unchecked run: %s" % exc.code)
        continue
    print("  unchecked run: X = %s" % X)
    print("  P_X(T) = P_H(+-T):", twist_equiv(weil_poly_of(X), W))
