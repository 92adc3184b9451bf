"""Harvest test instances: random curves with a rational (Z/3)^2 inside Jac[3].

For each random sextic we count points, keep the curve when 9 divides
#J(F_p) = P(1), and multiply random Jacobian elements by the prime-to-3
cofactor to reach 3-torsion.  Two independent order-3 classes give a
candidate kernel; it need not be Weil-isotropic unless p = 2 mod 3 (then
the pairing is trivial on rational points), so pipeline errors are
recorded instead of raised.
"""

import logging
import random
from dataclasses import dataclass, field

from .curve import Genus2Curve
from .errors import IsogenyError, NotSquarefree
from .field import is_probable_prime
from .isogeny import isogenous_curve
from .jacobian import IDENTITY, add, random_element, scalar_mul
from .verify import twist_equiv, weil_poly, weil_poly_of, count_points

log = logging.getLogger(__name__)


@dataclass
class ScanReport:
    instances: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    skipped: int = 0

    def to_json(self):
        return {"instances": self.instances, "failures": self.failures,
                "skipped": self.skipped}


def primes_between(lo, hi):
    return [q for q in range(max(lo, 5), hi + 1) if is_probable_prime(q)]


def random_curve(p, rng, f6_zero=False):
    while True:
        F = [rng.randrange(p) for _ in range(7)]
        if f6_zero:
            F[6] = 0
        try:
            return Genus2Curve(p, tuple(F))
        except NotSquarefree:
            continue


def three_torsion_pair(H, order, rng, tries=40):
    """Two independent rational 3-torsion classes, or None."""
    cofactor = order
    while cofactor % 3 == 0:
        cofactor //= 3
    found = []
    for _ in range(tries):
        x = scalar_mul(cofactor, random_element(H, rng), H)
        if x.d == 0:
            continue
        while True:
            y = scalar_mul(3, x, H)
            if y.d == 0:
                break
            x = y
        if not found:
            found.append(x)
            continue
        D1 = found[0]
        span = {IDENTITY, D1, add(D1, D1, H)}
        if x not in span:
            return D1, x
    return None


def scan(pmin, pmax, count, seed, max_curves=4000):
    rng = random.Random(seed)
    primes = primes_between(pmin, pmax)
    if not primes:
        raise ValueError("no usable primes in [%d, %d]" % (pmin, pmax))
    report = ScanReport()
    for k in range(max_curves):
        if len(report.instances) >= count:
            break
        p = rng.choice(primes)
        H = random_curve(p, rng, f6_zero=(k % 4 == 3))
        N1, N2 = count_points(H, 1), count_points(H, 2)
        W_H = weil_poly(N1, N2, p)
        order = W_H.at(1)
        if order % 9:
            report.skipped += 1
            continue
        pair = three_torsion_pair(H, order, rng)
        if pair is None:
            report.skipped += 1
            continue
        D1, D2 = pair
        job = {"curve": H.to_json(), "generators": [D1.to_json(), D2.to_json()],
               "options": {"verify": True, "emit_intermediate": False, "seed": seed}}
        try:
            result = isogenous_curve(H, D1, D2)
        except IsogenyError as exc:
            log.info("p=%d F=%s: %s", p, H.F, exc.code)
            report.failures.append({"job": job, "code": exc.code, "module": exc.module,
                                    "message": str(exc)})
            continue
        W_X = weil_poly_of(result.curve)
        ok = twist_equiv(W_X, W_H)
        entry = dict(job, X=result.curve.to_json(), weil_H=W_H.to_json(),
                     weil_X=W_X.to_json(), twist_equiv=ok)
        if not ok:
            report.failures.append(dict(entry, code="TwistMismatch", module="verify",
                                        message="pipeline completed but Weil polynomials differ"))
            continue
        report.instances.append(entry)
    return report
