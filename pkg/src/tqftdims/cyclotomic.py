"""Exact arithmetic in the cyclotomic field Q(zeta_p), p an odd prime >= 5.

Every element is stored as a vector of p-1 exact rationals giving its
coordinates over the power basis 1, zeta, ..., zeta^(p-2).  The relation
1 + zeta + ... + zeta^(p-1) = 0 eliminates zeta^(p-1), so equal field
elements always have identical coordinate vectors and `==` is decidable.

No floating point appears anywhere in this module.  The distinguished
element h = 1 - zeta generates the unique prime above p; h-adic valuations
are computed by exact division.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "CycNum",
    "INFINITE",
    "galois",
    "h_valuation",
    "inv",
    "is_prime",
    "monomial",
    "norm",
    "quantum_int",
    "root_of_unity",
]

#: Marker returned by :func:`h_valuation` for the zero element.
INFINITE = math.inf

_ZERO = Fraction(0)


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the small primes used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _check_order(p: int) -> int:
    if not isinstance(p, int) or p < 5 or not is_prime(p):
        raise ValueError(f"cyclotomic order must be a prime >= 5, got {p!r}")
    return p


class CycNum:
    """A number in Q(zeta_p) with exact rational power-basis coordinates.

    Supports +, -, *, /, ** with other CycNum of the same order and with
    plain integers or Fractions.  Instances are treated as immutable.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()) -> None:
        _check_order(p)
        vec = [Fraction(x) for x in coeffs]
        if len(vec) > p:
            raise ValueError(f"at most {p} coefficients allowed for order {p}")
        vec.extend([_ZERO] * (p - len(vec)))
        top = vec[p - 1]
        if top:
            # zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
            vec = [x - top for x in vec[: p - 1]]
        else:
            vec = vec[: p - 1]
        self.p = p
        self.coeffs = tuple(vec)

    # -- constructors ------------------------------------------------------

    @classmethod
    def scalar(cls, p: int, value) -> "CycNum":
        return cls(p, [value])

    # -- predicates --------------------------------------------------------

    def is_integral(self) -> bool:
        """True when every power-basis coordinate is a rational integer."""
        return all(c.denominator == 1 for c in self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        """Return the element as a Fraction, or raise if it is irrational."""
        if not self.is_rational():
            raise ArithmeticError(f"element is not rational: {self!r}")
        return self.coeffs[0]

    def coeff_sum(self) -> Fraction:
        return sum(self.coeffs, _ZERO)

    # -- ring / field operations -------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.p != self.p:
                raise ValueError(
                    f"mixed cyclotomic orders: {self.p} and {other.p}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.scalar(self.p, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.p, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.p, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycNum(self.p, [-a for a in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        acc = [_ZERO] * p
        for i, ai in enumerate(self.coeffs):
            if not ai:
                continue
            for j, bj in enumerate(o.coeffs):
                if not bj:
                    continue
                k = i + j
                if k >= p:
                    k -= p
                acc[k] += ai * bj
        return CycNum(p, acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * inv(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * inv(self)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return inv(self) ** (-n)
        result = CycNum.scalar(self.p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z" if c != 1 else "z")
            else:
                terms.append(f"{c}*z^{i}" if c != 1 else f"z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"CycNum({self.p}: {body})"


def root_of_unity(p: int) -> CycNum:
    """The primitive p-th root of unity zeta_p as a field element."""
    _check_order(p)
    return monomial(p, 1)


def monomial(p: int, k: int) -> CycNum:
    """zeta_p^k for any integer k, reduced to canonical form."""
    _check_order(p)
    vec = [0] * p
    vec[k % p] = 1
    return CycNum(p, vec)


# -- inverse via extended Euclid vs the p-th cyclotomic polynomial -----------


def _poly_trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO) for i in range(n)]
    return _poly_trim(out)


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] / lead
        k = len(a) - len(b)
        q[k] = f
        for i, bi in enumerate(b):
            a[k + i] -= f * bi
        _poly_trim(a)
    return _poly_trim(q), a


def inv(x: CycNum) -> CycNum:
    """Multiplicative inverse, by extended Euclid against 1 + t + ... + t^(p-1)."""
    if not x:
        raise ZeroDivisionError("inverse of zero in a cyclotomic field")
    p = x.p
    modulus = [Fraction(1)] * p
    r0, r1 = modulus, _poly_trim(list(x.coeffs))
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    # r0 is a nonzero constant: the modulus is irreducible over Q.
    if len(r0) != 1:
        raise ArithmeticError("gcd with the cyclotomic polynomial is not constant")
    g = r0[0]
    return CycNum(p, [t / g for t in t0])


def galois(x: CycNum, j: int) -> CycNum:
    """Apply the automorphism zeta -> zeta^j.  Requires gcd(j, p) = 1."""
    p = x.p
    jj = j % p
    if jj == 0:
        raise ValueError(f"galois index must be invertible mod {p}, got {j}")
    acc = [_ZERO] * p
    for i, ci in enumerate(x.coeffs):
        if ci:
            acc[(i * jj) % p] += ci
    return CycNum(p, acc)


def norm(x: CycNum) -> Fraction:
    """Field norm: the product of all p-1 Galois conjugates.  Always rational."""
    acc = CycNum.scalar(x.p, 1)
    for j in range(1, x.p):
        acc = acc * galois(x, j)
    return acc.as_rational()


def quantum_int(p: int, n: int) -> CycNum:
    """The quantum integer [n] = (q^n - q^-n)/(q - q^-1) at q = zeta_p.

    Computed from the telescoped sum q^(n-1) + q^(n-3) + ... + q^(1-n), so the
    result is visibly integral.  [n] is a unit of Z[zeta_p] for 1 <= n <= p-1.
    """
    _check_order(p)
    if n < 0:
        raise ValueError("quantum integer index must be >= 0")
    vec = [0] * p
    for k in range(n):
        vec[(n - 1 - 2 * k) % p] += 1
    return CycNum(p, vec)


@lru_cache(maxsize=None)
def _inv_h(p: int) -> CycNum:
    return inv(CycNum(p, [1, -1]))


def h_valuation(x: CycNum):
    """h-adic valuation of an integral element, where h = 1 - zeta.

    Returns INFINITE for zero.  An integral x is divisible by h exactly when
    its coordinate sum vanishes mod p (reduce via zeta -> 1), and then the
    quotient x/h is again integral; repeat until the test fails.
    """
    if not x.is_integral():
        raise ValueError("h-adic valuation is defined for integral elements only")
    if not x:
        return INFINITE
    p = x.p
    ih = _inv_h(p)
    v = 0
    cur = x
    while int(cur.coeff_sum()) % p == 0:
        cur = cur * ih
        if not cur.is_integral():
            raise ArithmeticError("exact division by 1 - zeta produced a non-integral result")
        v += 1
    return v
