"""Exact polynomial identities in the prime P and the trunk half-color C.

The dimension counts, viewed as functions of (p, c), are polynomials with
rational coefficients: the signed count delta has total degree 2g - 1 and
the total count has 3g - 2.  This module recovers those polynomials two
independent ways - exact Newton interpolation through recursion-table
samples, and a Bernoulli-series residue construction - and checks their
degree and leading-term structure against closed Bernoulli forms.

All coefficients are Fractions throughout; nothing here touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import is_prime
from .recursion import dim_table

__all__ = [
    "BiPoly",
    "ConjectureScan",
    "InterpolationError",
    "LeadingTermError",
    "Series",
    "bern_identity_check",
    "bernoulli",
    "bernoulli_series",
    "conjecture_scan",
    "delta_leading_form",
    "half_total_top_form",
    "interpolate_delta",
    "interpolate_total",
    "leading_term_report",
    "newton_coeffs",
    "normalized_bernoulli",
    "power_sum_coeffs",
    "residue_total_poly",
    "sinh_ratio_series",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class InterpolationError(ValueError):
    """Raised for an unusable sample grid or a failed held-out validation."""


class LeadingTermError(AssertionError):
    """Raised when an interpolated polynomial violates a leading-term claim."""


# -- Bernoulli numbers --------------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k in the convention t/(e^t - 1) = sum B_k t^k / k!,
    so B_1 = -1/2 and B_k = 0 for odd k >= 3."""
    if k < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if k == 0:
        return _ONE
    if k % 2 and k > 1:
        return _ZERO
    acc = _ZERO
    for j in range(k):
        acc += math.comb(k + 1, j) * bernoulli(j)
    return -acc / (k + 1)


def normalized_bernoulli(n: int) -> Fraction:
    """The positive rational (1/2) (-1)^(n+1) B_{2n} / (2n)! for n >= 1;
    equals zeta(2n) / (2 pi)^(2n).  Examples: 1/24, 1/1440, 1/60480, ..."""
    if n < 1:
        raise ValueError("index must be >= 1")
    return Fraction((-1) ** (n + 1), 2) * bernoulli(2 * n) / math.factorial(2 * n)


def bern_identity_check(g: int) -> bool:
    """sum_{k=0}^{2g+2} 2^k (2^k - 1) C(2g+2, k) B_k == 0."""
    if g < 0:
        raise ValueError("g must be >= 0")
    n = 2 * g + 2
    acc = _ZERO
    for k in range(n + 1):
        acc += (2**k) * (2**k - 1) * math.comb(n, k) * bernoulli(k)
    return acc == 0


def power_sum_coeffs(k: int) -> list[Fraction]:
    """Coefficients (ascending) of the polynomial N -> sum_{n=0}^{N-1} n^k.

    Faulhaber with B_1 = -1/2; the leading term is N^(k+1)/(k+1).
    """
    if k < 0:
        raise ValueError("power must be >= 0")
    out = [_ZERO] * (k + 2)
    for j in range(k + 1):
        out[k + 1 - j] = Fraction(math.comb(k + 1, j), k + 1) * bernoulli(j)
    return out


# -- exact bivariate polynomials ----------------------------------------------


def _sort_key(ij):
    return (-(ij[0] + ij[1]), -ij[0])


class BiPoly:
    """Polynomial in P (prime) and C (half-color) over exact rationals.

    Monomial keys are (p_exponent, c_exponent).  Instances are immutable.
    """

    __slots__ = ("_m",)

    def __init__(self, monomials=None) -> None:
        m = {}
        if monomials:
            for (i, j), q in monomials.items():
                q = Fraction(q)
                if q:
                    m[(int(i), int(j))] = q
        self._m = m

    # -- constructors --------------------------------------------------------

    @classmethod
    def const(cls, q) -> "BiPoly":
        return cls({(0, 0): Fraction(q)})

    @classmethod
    def var_p(cls) -> "BiPoly":
        return cls({(1, 0): _ONE})

    @classmethod
    def var_c(cls) -> "BiPoly":
        return cls({(0, 1): _ONE})

    # -- inspection ----------------------------------------------------------

    def monomials(self) -> dict:
        return dict(self._m)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._m.get((i, j), _ZERO)

    def total_degree(self) -> int:
        return max((i + j for i, j in self._m), default=-1)

    def degree_in_p(self) -> int:
        return max((i for i, _ in self._m), default=-1)

    def degree_in_c(self) -> int:
        return max((j for _, j in self._m), default=-1)

    def homogeneous_part(self, n: int) -> "BiPoly":
        return BiPoly({ij: q for ij, q in self._m.items() if ij[0] + ij[1] == n})

    def p_coefficient(self, i: int) -> "BiPoly":
        """Coefficient of P^i, as a polynomial in C alone."""
        return BiPoly({(0, j): q for (ii, j), q in self._m.items() if ii == i})

    def subs_c(self, value) -> "BiPoly":
        """Substitute a rational for C."""
        value = Fraction(value)
        out: dict = {}
        for (i, j), q in self._m.items():
            out[(i, 0)] = out.get((i, 0), _ZERO) + q * value**j
        return BiPoly(out)

    def eval(self, p_value, c_value) -> Fraction:
        pv, cv = Fraction(p_value), Fraction(c_value)
        return sum((q * pv**i * cv**j for (i, j), q in self._m.items()), _ZERO)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._m)
        for ij, q in o._m.items():
            out[ij] = out.get(ij, _ZERO) + q
        return BiPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._m)
        for ij, q in o._m.items():
            out[ij] = out.get(ij, _ZERO) - q
        return BiPoly(out)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return BiPoly({ij: -q for ij, q in self._m.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for (i1, j1), q1 in self._m.items():
            for (i2, j2), q2 in o._m.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, _ZERO) + q1 * q2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = BiPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def reciprocal(self) -> "BiPoly":
        if list(self._m) != [(0, 0)]:
            raise ArithmeticError("only nonzero constants are invertible")
        return BiPoly.const(1 / self._m[(0, 0)])

    # -- comparisons and text -----------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._m == o._m

    def __hash__(self):
        return hash(frozenset(self._m.items()))

    def __bool__(self):
        return bool(self._m)

    def __repr__(self):
        return f"BiPoly({self.canonical_str()})"

    def canonical_str(self) -> str:
        """Deterministic text form, monomials sorted by total degree then
        P-degree, both descending: e.g. ``(1/24)P^3 + (-1/4)C^2P + ...``."""
        if not self._m:
            return "(0)"
        parts = []
        for i, j in sorted(self._m, key=_sort_key):
            q = self._m[(i, j)]
            coeff = f"({q.numerator})" if q.denominator == 1 else f"({q})"
            body = ""
            if j == 1:
                body += "C"
            elif j > 1:
                body += f"C^{j}"
            if i == 1:
                body += "P"
            elif i > 1:
                body += f"P^{i}"
            parts.append(coeff + body)
        return " + ".join(parts)

    def to_json_obj(self) -> dict:
        """JSON form: {"monomials": [{"p": i, "c": j, "num": n, "den": d}, ...]}."""
        return {
            "monomials": [
                {
                    "p": i,
                    "c": j,
                    "num": self._m[(i, j)].numerator,
                    "den": self._m[(i, j)].denominator,
                }
                for i, j in sorted(self._m, key=_sort_key)
            ]
        }


# -- truncated power series ---------------------------------------------------


def _recip(x):
    if isinstance(x, BiPoly):
        return x.reciprocal()
    return _ONE / Fraction(x)


class Series:
    """Power series in t truncated at a fixed order, with exact coefficients.

    Coefficients may be Fractions or BiPoly; operands must share the order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def _same(self, other: "Series") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("series orders differ")

    def __add__(self, other: "Series") -> "Series":
        self._same(other)
        return Series(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "Series") -> "Series":
        self._same(other)
        return Series(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: "Series") -> "Series":
        self._same(other)
        n = len(self.coeffs)
        out = []
        for m in range(n):
            acc = self.coeffs[0] * other.coeffs[m]
            for k in range(1, m + 1):
                acc = acc + self.coeffs[k] * other.coeffs[m - k]
            out.append(acc)
        return Series(out)

    def __pow__(self, n: int) -> "Series":
        if not isinstance(n, int) or n < 1:
            raise ValueError("series power must be a positive integer")
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def inverse(self) -> "Series":
        """Multiplicative inverse; the constant term must be invertible."""
        a = self.coeffs
        b0 = _recip(a[0])
        out = [b0]
        for m in range(1, len(a)):
            acc = a[1] * out[m - 1]
            for k in range(2, m + 1):
                acc = acc + a[k] * out[m - k]
            out.append(-(b0 * acc))
        return Series(out)


def bernoulli_series(order: int, scale) -> Series:
    """x t/(e^(x t) - 1) as a series in t: coefficient B_n x^n / n! at t^n."""
    return Series(
        scale**n * Fraction(bernoulli(n), math.factorial(n)) for n in range(order + 1)
    )


def sinh_ratio_series(order: int, scale) -> Series:
    """sinh(x t)/(x t) as a series in t: x^(2k) / (2k+1)! at t^(2k)."""
    zero = scale * Fraction(0)
    return Series(
        scale**n * Fraction(1, math.factorial(n + 1)) if n % 2 == 0 else zero
        for n in range(order + 1)
    )


# -- residue construction of the total-count polynomial -----------------------


def _residue_coeff(g: int, order: int) -> BiPoly:
    two_p = BiPoly({(1, 0): Fraction(2)})
    odd_c = BiPoly({(0, 1): Fraction(2), (0, 0): _ONE})
    a = bernoulli_series(order, two_p)
    b = sinh_ratio_series(order, odd_c)
    s = sinh_ratio_series(order, BiPoly.const(1))
    integrand = a * b * (s.inverse() ** (2 * g - 1))
    return integrand.coeffs[2 * g - 2]


def residue_total_poly(g: int) -> BiPoly:
    """Total-count polynomial from the residue of
    (2Pt/(e^(2Pt)-1)) * sinh((2C+1)t)/( (2C+1)t ) * (t/sinh t)^(2g-1) dt / t^(2g-1),
    combined with a falling-factorial binomial correction.  Needs g >= 2.
    """
    if g < 2:
        raise ValueError("residue construction requires g >= 2")
    res = _residue_coeff(g, 2 * g - 2 + 4)
    if res != _residue_coeff(g, 2 * g - 2 + 2):
        raise ArithmeticError("series truncation guard failed: residue unstable")
    # binom(C + g - 1, 2g - 2) as an exact polynomial in C
    binom = BiPoly.const(Fraction(1, math.factorial(2 * g - 2)))
    for i in range(2 * g - 2):
        binom = binom * BiPoly({(0, 1): _ONE, (0, 0): Fraction(g - 1 - i)})
    odd_c = BiPoly({(0, 1): Fraction(2), (0, 0): _ONE})
    p_pow = BiPoly({(g - 1, 0): _ONE})
    term1 = odd_c * p_pow * res * Fraction(1, 4 ** (g - 1))
    term2 = BiPoly({(g, 0): _ONE}) * binom
    return (term1 - term2) * Fraction((-1) ** g, 2)


# -- exact interpolation from recursion tables --------------------------------


def newton_coeffs(xs, ys) -> list[Fraction]:
    """Monomial coefficients (ascending) of the Newton interpolant through
    the points (xs[i], ys[i]); xs must be pairwise distinct."""
    n = len(xs)
    if n != len(ys) or n == 0:
        raise ValueError("need equally many sample points and values, at least one")
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = [_ZERO] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + dd[i]
        shifted = [_ZERO] + poly[:-1]
        poly = [s - xs[i] * c for s, c in zip(shifted, poly + [_ZERO])][:n]
        poly[0] += dd[i]
    return poly


def _prime_grid(count: int, floor: int) -> list[int]:
    out = []
    n = max(5, floor)
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n += 1
    return out


def _next_prime(n: int) -> int:
    n += 1
    while not is_prime(n):
        n += 1
    return n


def _delta_value(p: int, g: int, c: int) -> int:
    return dim_table(p, g).delta(g, c)


def _total_value(p: int, g: int, c: int) -> int:
    return dim_table(p, g).total(g, c)


_VALUE_FNS = {"delta": _delta_value, "total": _total_value}


def interpolate_delta(g: int, primes=()) -> BiPoly:
    """Exact bivariate polynomial of total degree 2g - 1 through signed counts.

    With no primes given, the smallest sufficient grid is selected
    automatically; supplied primes beyond the fit size become extra
    held-out validation points.
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    return _interpolate(g, 2 * g - 1, tuple(primes), "delta")


def interpolate_total(g: int, primes=()) -> BiPoly:
    """Exact bivariate polynomial of total degree 3g - 2 through total counts."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    return _interpolate(g, 3 * g - 2, tuple(primes), "total")


@lru_cache(maxsize=None)
def _interpolate(g: int, deg: int, primes: tuple, kind: str) -> BiPoly:
    value = _VALUE_FNS[kind]
    need = deg + 1
    # every fit prime must admit c = 0..deg, i.e. (p-3)/2 >= deg
    floor = max(5, 4 * g + 3, 2 * deg + 3)
    if primes:
        for p in primes:
            if not is_prime(p) or p < 5:
                raise InterpolationError(f"insufficient sample grid: {p} is not a usable prime")
        if len(primes) < need:
            raise InterpolationError(
                f"insufficient sample grid: need {need} primes, got {len(primes)}"
            )
        if any(p < 2 * deg + 3 for p in primes[:need]):
            raise InterpolationError(
                f"insufficient sample grid: fit primes must be >= {2 * deg + 3}"
            )
        fit = list(primes[:need])
        extras = list(primes[need:])
    else:
        fit = _prime_grid(need, floor)
        extras = []

    cs = list(range(deg + 1))
    per_prime = {}
    for p in fit:
        ys = [value(p, g, c) for c in cs]
        per_prime[p] = newton_coeffs(cs, ys)
    mono: dict = {}
    for j in range(deg + 1):
        pc = newton_coeffs(fit, [per_prime[p][j] for p in fit])
        for i, q in enumerate(pc):
            if q:
                mono[(i, j)] = q
    poly = BiPoly(mono)

    held = []
    probe = _next_prime(max(fit))
    for c in range(3):
        held.append((probe, c))
    d_last = (max(fit) - 3) // 2
    for c in (deg + 1, deg + 2):
        if c <= d_last:
            held.append((max(fit), c))
    for p in extras:
        held.append((p, 0))
        held.append((p, 1))
    while len(held) < 5:
        probe = _next_prime(probe)
        held.append((probe, 0))
    for p, c in held:
        got = poly.eval(p, c)
        want = value(p, g, c)
        if got != want:
            raise InterpolationError(
                f"held-out validation failed for {kind} at (p={p}, c={c}): "
                f"{got} != {want}"
            )
    return poly


# -- leading-term structure ----------------------------------------------------


def delta_leading_form(g: int) -> BiPoly:
    """Top homogeneous part (degree 2g - 1) of the signed-count polynomial:
    (-1)^(g-1) sum_{k=1}^{2g} 2 (2^k - 1) (B_k / k!) (C^(2g-k) / (2g-k)!) P^(k-1)."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    sign = Fraction((-1) ** (g - 1))
    acc = BiPoly()
    for k in range(1, 2 * g + 1):
        q = (
            sign
            * 2
            * (2**k - 1)
            * bernoulli(k)
            / math.factorial(k)
            / math.factorial(2 * g - k)
        )
        acc = acc + BiPoly({(k - 1, 2 * g - k): q})
    return acc


def half_total_top_form(g: int) -> BiPoly:
    """The two top homogeneous layers (degrees 3g - 2 and 3g - 3) shared by the
    even and odd counts for g >= 3:
    ((-1)^g / 4) sum_{k=0}^{2g-2} (B_k/k!) (C^(2g-2-k)/(2g-2-k)!) (1 + 2C/(2g-1-k)) P^(g-1+k)."""
    if g < 3:
        raise ValueError("shared top form needs g >= 3")
    acc = BiPoly()
    sign = Fraction((-1) ** g, 4)
    for k in range(2 * g - 1):
        base = sign * bernoulli(k) / math.factorial(k) / math.factorial(2 * g - 2 - k)
        if not base:
            continue
        me = BiPoly({(g - 1 + k, 2 * g - 2 - k): base})
        tail = BiPoly({(g - 1 + k, 2 * g - 1 - k): base * Fraction(2, 2 * g - 1 - k)})
        acc = acc + me + tail
    return acc


def leading_term_report(g: int) -> dict[str, bool]:
    """Check every degree/leading-term claim for one genus.

    Raises LeadingTermError naming the claim on the first mismatch; returns
    a dict mapping each verified claim to True.
    """
    if g < 2:
        raise ValueError("leading-term report needs g >= 2")
    report: dict[str, bool] = {}

    def claim(name: str, ok: bool) -> None:
        if not ok:
            raise LeadingTermError(f"leading-term claim failed at g={g}: {name}")
        report[name] = True

    dpoly = interpolate_delta(g)
    tpoly = interpolate_total(g)
    epoly = (tpoly + dpoly) * Fraction(1, 2)
    opoly = (tpoly - dpoly) * Fraction(1, 2)

    claim("signed count has total degree 2g-1", dpoly.total_degree() == 2 * g - 1)
    claim("total count has total degree 3g-2", tpoly.total_degree() == 3 * g - 2)
    claim(
        "even and odd counts have total degree 3g-2",
        epoly.total_degree() == 3 * g - 2 and opoly.total_degree() == 3 * g - 2,
    )
    claim(
        "signed top layer matches the Bernoulli form",
        dpoly.homogeneous_part(2 * g - 1) == delta_leading_form(g),
    )
    lead = BiPoly.const(4 * (2 ** (2 * g) - 1) * normalized_bernoulli(g))
    claim(
        "signed P-leading coefficient is 4(2^(2g)-1) times the normalized Bernoulli number",
        dpoly.p_coefficient(2 * g - 1) == lead,
    )
    if g == 2:
        cpoly = BiPoly.var_c()
        claim(
            "even count leads with (C+1)/24 at P^3",
            epoly.p_coefficient(3) == (cpoly + 1) * Fraction(1, 24),
        )
        claim(
            "odd count leads with C/24 at P^3",
            opoly.p_coefficient(3) == cpoly * Fraction(1, 24),
        )
    else:
        top = half_total_top_form(g)
        for n in (3 * g - 2, 3 * g - 3):
            claim(
                f"even/odd counts share the half-total layer of degree {n}",
                epoly.homogeneous_part(n) == top.homogeneous_part(n)
                and opoly.homogeneous_part(n) == top.homogeneous_part(n),
            )
        claim(
            "half of the total matches the shared top layers",
            (tpoly * Fraction(1, 2)).homogeneous_part(3 * g - 2)
            == top.homogeneous_part(3 * g - 2)
            and (tpoly * Fraction(1, 2)).homogeneous_part(3 * g - 3)
            == top.homogeneous_part(3 * g - 3),
        )
        want = (BiPoly.var_c() + Fraction(1, 2)) * normalized_bernoulli(g - 1)
        claim(
            "even and odd counts have P-degree 3g-3 with leading coefficient (C+1/2) "
            "times the normalized Bernoulli number",
            epoly.degree_in_p() == 3 * g - 3
            and opoly.degree_in_p() == 3 * g - 3
            and epoly.p_coefficient(3 * g - 3) == want
            and opoly.p_coefficient(3 * g - 3) == want,
        )
    return report


# -- exploratory pattern scan ---------------------------------------------------


@dataclass(frozen=True)
class ConjectureScan:
    """Observed patterns in the signed-count polynomial for one genus."""

    g: int
    no_positive_even_p_powers: bool
    base_specialization_divisible: bool


def _uni_divisible(num: list[Fraction], den: list[Fraction]) -> bool:
    num = list(num)
    while num and not num[-1]:
        num.pop()
    while num and len(num) >= len(den):
        f = num[-1] / den[-1]
        k = len(num) - len(den)
        for i, dv in enumerate(den):
            num[k + i] -= f * dv
        while num and not num[-1]:
            num.pop()
    return not num


def conjecture_scan(g: int) -> ConjectureScan:
    """Scan two observed-but-unproven patterns; reported, never load-bearing.

    (i) every monomial P^m C^n with m > 0 has m odd; (ii) the C = 0
    specialization is divisible by P(P^2 - 1)/24 as a polynomial.
    """
    if g < 2:
        raise ValueError("scan needs g >= 2")
    dpoly = interpolate_delta(g)
    pat1 = all(i == 0 or i % 2 == 1 for (i, _j) in dpoly.monomials())
    at0 = dpoly.subs_c(0)
    deg = at0.degree_in_p()
    num = [at0.coefficient(i, 0) for i in range(deg + 1)]
    den = [_ZERO, Fraction(-1, 24), _ZERO, Fraction(1, 24)]
    pat2 = _uni_divisible(num, den)
    return ConjectureScan(g, pat1, pat2)
