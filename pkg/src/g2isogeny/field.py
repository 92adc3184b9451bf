"""Prime fields F_p (elements are plain ints) and the quadratic extension F_{p^2}.

Elements of F_p are represented as Python ints in ``range(p)``; the modulus
travels with a :class:`PrimeField` context.  F_{p^2} = F_p(t), t^2 = s for
the smallest positive non-residue s, has a small element class
:class:`Fp2` with operator overloading.  It is only used off the hot
paths (point splitting, oracles, the split-conic branch).
"""

from functools import lru_cache

from .errors import BadModulus, NoRoot


def is_probable_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inv(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 mod %d" % p)
    return pow(a, -1, p)


def legendre(a, p):
    """Legendre symbol (a/p) in {-1, 0, 1}."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def smallest_nonresidue(p):
    s = 2
    while legendre(s, p) != -1:
        s += 1
    return s


def sqrt_mod(a, p):
    """Square root of ``a`` modulo the odd prime ``p``.

    Tonelli-Shanks with the smallest non-residue; returns the root whose
    representative in [0, p) is smaller.  Raises :class:`NoRoot` for
    non-residues.
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        raise NoRoot("%d is not a square mod %d" % (a, p))
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, e = p - 1, 0
        while q % 2 == 0:
            q //= 2
            e += 1
        z = pow(smallest_nonresidue(p), q, p)
        r = pow(a, (q + 1) // 2, p)
        t = pow(a, q, p)
        m = e
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(z, 1 << (m - i - 1), p)
            r = r * b % p
            z = b * b % p
            t = t * z % p
            m = i
    return min(r, p - r)


class PrimeField:
    """Context object for F_p; elements are ints."""

    def __init__(self, p):
        if p in (2, 3) or not is_probable_prime(p):
            raise BadModulus("modulus must be a prime other than 2 and 3, got %r" % (p,))
        self.p = p

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __call__(self, value):
        return value % self.p

    # operations used by the field-generic linear algebra
    zero = 0
    one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        return inv(a, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def sqrt(self, a):
        return sqrt_mod(a, self.p)

    def is_square(self, a):
        return legendre(a, self.p) >= 0

    def ext(self):
        return QuadraticExtension(self.p)


class QuadraticExtension:
    """F_{p^2} = F_p[t]/(t^2 - s) with s the smallest positive non-residue."""

    def __init__(self, p):
        if p in (2, 3) or not is_probable_prime(p):
            raise BadModulus("modulus must be a prime other than 2 and 3, got %r" % (p,))
        self.p = p
        self.s = smallest_nonresidue(p)

    def __repr__(self):
        return "QuadraticExtension(%d, t^2=%d)" % (self.p, self.s)

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and other.p == self.p

    def __hash__(self):
        return hash(("F2", self.p))

    def __call__(self, c0, c1=0):
        if isinstance(c0, Fp2):
            return c0
        return Fp2(c0 % self.p, c1 % self.p, self)

    @property
    def zero(self):
        return Fp2(0, 0, self)

    @property
    def one(self):
        return Fp2(1, 0, self)

    @property
    def gen(self):
        return Fp2(0, 1, self)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return a.inverse()

    def is_zero(self, a):
        return a == 0

    def sqrt(self, a):
        return self(a).sqrt()

    def is_square(self, a):
        return self(a).is_square()

    def sqrt_of_base(self, a):
        """Square root in F_{p^2} of an element of F_p; always exists."""
        p = self.p
        a %= p
        if legendre(a, p) >= 0:
            return self(sqrt_mod(a, p))
        # a = s * (a/s) with a/s a residue, so sqrt(a) = t * sqrt(a/s)
        return self(0, sqrt_mod(a * inv(self.s, p), p))


class Fp2:
    """Element c0 + c1*t of F_{p^2}."""

    __slots__ = ("c0", "c1", "K")

    def __init__(self, c0, c1, K):
        self.c0 = c0
        self.c1 = c1
        self.K = K

    def _coerce(self, other):
        if isinstance(other, Fp2):
            return other
        if isinstance(other, int):
            return Fp2(other % self.K.p, 0, self.K)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.K.p
        return Fp2((self.c0 + o.c0) % p, (self.c1 + o.c1) % p, self.K)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.K.p
        return Fp2((self.c0 - o.c0) % p, (self.c1 - o.c1) % p, self.K)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        p = self.K.p
        return Fp2(-self.c0 % p, -self.c1 % p, self.K)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p, s = self.K.p, self.K.s
        a0, a1, b0, b1 = self.c0, self.c1, o.c0, o.c1
        return Fp2((a0 * b0 + s * a1 * b1) % p, (a0 * b1 + a1 * b0) % p, self.K)

    __rmul__ = __mul__

    def conjugate(self):
        return Fp2(self.c0, -self.c1 % self.K.p, self.K)

    def norm(self):
        p = self.K.p
        return (self.c0 * self.c0 - self.K.s * self.c1 * self.c1) % p

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in F_p^2")
        ni = inv(n, self.K.p)
        c = self.conjugate()
        p = self.K.p
        return Fp2(c.c0 * ni % p, c.c1 * ni % p, self.K)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = Fp2(1, 0, self.K)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.c0 == o.c0 and self.c1 == o.c1 and self.K.p == o.K.p

    def __hash__(self):
        if self.c1 == 0:
            return hash(self.c0)
        return hash((self.c0, self.c1, self.K.p))

    def __bool__(self):
        return bool(self.c0 or self.c1)

    def __repr__(self):
        if self.c1 == 0:
            return "%d" % self.c0
        return "(%d + %d*t)" % (self.c0, self.c1)

    def in_base_field(self):
        return self.c1 == 0

    def to_int(self):
        if self.c1:
            raise ValueError("%r is not in F_p" % (self,))
        return self.c0

    def is_square(self):
        # z is a square in F_{p^2} iff its norm is a square in F_p
        return legendre(self.norm(), self.K.p) >= 0

    def sqrt(self):
        """Tonelli-Shanks in F_{p^2}^*; canonical root has the smaller (c0, c1)."""
        if not self:
            return self
        if not self.is_square():
            raise NoRoot("%r is not a square in F_%d^2" % (self, self.K.p))
        K = self.K
        if self.c1 == 0:
            r = K.sqrt_of_base(self.c0)
        else:
            q, e = K.p * K.p - 1, 0
            while q % 2 == 0:
                q //= 2
                e += 1
            z = _fp2_nonresidue(K) ** q
            r = self ** ((q + 1) // 2)
            t = self ** q
            m = e
            while t != 1:
                i, t2 = 0, t
                while t2 != 1:
                    t2 = t2 * t2
                    i += 1
                b = z ** (1 << (m - i - 1))
                r = r * b
                z = b * b
                t = t * z
                m = i
        other = -r
        return r if (r.c0, r.c1) <= (other.c0, other.c1) else other


@lru_cache(maxsize=None)
def _fp2_nonresidue_cached(p):
    K = QuadraticExtension(p)
    for c in range(p):
        z = Fp2(c, 1, K)
        if not z.is_square():
            return c
    raise AssertionError("no non-residue found")


def _fp2_nonresidue(K):
    return Fp2(_fp2_nonresidue_cached(K.p), 1, K)
