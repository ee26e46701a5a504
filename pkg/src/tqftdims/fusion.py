"""The rank-d fusion quotient K[z]/(e_d - e_(d-1)) and its exact linear algebra.

e_n denotes the Chebyshev-like basis polynomials e_0 = 1, e_1 = z,
e_(n+1) = z e_n - e_(n-1); in the quotient they fold as e_(d+i) = e_(d-1-i),
so e_0..e_(d-1) is a basis and the even-index family e_0, e_2, ..., e_(2d-2)
is the same basis reordered by an explicit permutation.

Everything here is exact: matrices over integers or over Q(zeta_p).  Two
distinguished elements drive the dimension counts: the alternating element
sum (-1)^n (d - n) e_{2n}, whose matrix powers produce the signed counts,
and the plain counting element sum (d - n) e_{2n} for the totals.  Their
matrices diagonalize over Q(zeta_p) through the S-matrix, which converts
matrix entries into short Galois sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import (
    INFINITE,
    CycNum,
    galois,
    h_valuation,
    inv,
    is_prime,
    monomial,
    norm,
    quantum_int,
)

__all__ = [
    "FusionElement",
    "FusionMatrix",
    "HopfCertificate",
    "alternating_eigenvalue",
    "alternating_element",
    "cheb_vector",
    "counting_eigenvalue",
    "counting_element",
    "delta_via_matrix",
    "even_basis_permutation",
    "galois_sum_delta",
    "galois_sum_total",
    "hopf_certificate",
    "hopf_vandermonde",
    "mul_matrix_even",
    "qmatrix",
    "smatrix",
    "total_via_matrix",
]


def _rank(p: int) -> int:
    if not is_prime(p) or p < 5:
        raise ValueError(f"p must be a prime >= 5, got {p}")
    return (p - 1) // 2


def _mul_by_z(p: int, vec):
    """Coordinates of z * x given coordinates of x, folding e_d back to e_(d-1)."""
    d = (p - 1) // 2
    out = [0] * d
    for k, c in enumerate(vec):
        if not c:
            continue
        if k == 0:
            out[1] += c
        elif k < d - 1:
            out[k - 1] += c
            out[k + 1] += c
        else:
            out[d - 2] += c
            out[d - 1] += c
    return out


@dataclass(frozen=True)
class FusionElement:
    """An element of the quotient, as coordinates over e_0..e_(d-1)."""

    p: int
    coords: tuple

    def __post_init__(self) -> None:
        d = _rank(self.p)
        if len(self.coords) != d:
            raise ValueError(f"need {d} coordinates for p={self.p}")

    def __add__(self, other: "FusionElement") -> "FusionElement":
        self._same(other)
        return FusionElement(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FusionElement") -> "FusionElement":
        self._same(other)
        return FusionElement(self.p, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, other):
        if isinstance(other, FusionElement):
            self._same(other)
            return FusionElement(self.p, tuple(_product(self.p, self.coords, other.coords)))
        if isinstance(other, (int, Fraction)):
            return FusionElement(self.p, tuple(other * a for a in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def _same(self, other: "FusionElement") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed ranks: p={self.p} and p={other.p}")

    def even_coords(self) -> tuple:
        """Coordinates over the reordered basis e_0, e_2, ..., e_(2d-2)."""
        perm = even_basis_permutation(self.p)
        return tuple(self.coords[perm[j]] for j in range(len(perm)))


def _product(p: int, xv, yv):
    """Multiply in the quotient by expanding x along the Chebyshev ladder:
    e_0 y = y, e_1 y = z y, e_(i+1) y = z (e_i y) - e_(i-1) y."""
    d = (p - 1) // 2
    out = [0] * d
    prev = None
    cur = list(yv)
    for i, xi in enumerate(xv):
        if xi:
            for k in range(d):
                out[k] += xi * cur[k]
        if i + 1 < d:
            nxt = _mul_by_z(p, cur)
            if prev is not None:
                nxt = [n - q for n, q in zip(nxt, prev)]
            prev, cur = cur, nxt
    return out


def cheb_vector(p: int, n: int) -> FusionElement:
    """e_n reduced into the quotient, computed honestly along the ladder."""
    d = _rank(p)
    if n < 0:
        raise ValueError("ladder index must be >= 0")
    prev = None
    cur = [0] * d
    cur[0] = 1
    for _ in range(n):
        nxt = _mul_by_z(p, cur)
        if prev is not None:
            nxt = [a - b for a, b in zip(nxt, prev)]
        prev, cur = cur, nxt
    return FusionElement(p, tuple(cur))


@lru_cache(maxsize=None)
def even_basis_permutation(p: int) -> tuple[int, ...]:
    """Position of e_{2j} in the standard basis: 2j if 2j <= d-1, else 2d-1-2j."""
    d = _rank(p)
    perm = []
    for j in range(d):
        target = 2 * j if 2 * j <= d - 1 else 2 * d - 1 - 2 * j
        vec = cheb_vector(p, 2 * j).coords
        if vec != tuple(1 if k == target else 0 for k in range(d)):
            raise ArithmeticError(f"fold of e_{2 * j} is not a basis vector at p={p}")
        perm.append(target)
    if sorted(perm) != list(range(d)):
        raise ArithmeticError(f"even-index family is not a basis permutation at p={p}")
    return tuple(perm)


@dataclass(frozen=True)
class FusionMatrix:
    """A d x d matrix; entries[j][i] is row j, column i."""

    p: int
    entries: tuple[tuple, ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, p: int) -> "FusionMatrix":
        d = _rank(p)
        return cls(p, tuple(tuple(1 if i == j else 0 for i in range(d)) for j in range(d)))

    def __mul__(self, other):
        if isinstance(other, FusionMatrix):
            if self.p != other.p or self.size != other.size:
                raise ValueError("matrix shapes or ranks differ")
            n = self.size
            rows = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = self.entries[i][0] * other.entries[0][j]
                    for k in range(1, n):
                        acc = acc + self.entries[i][k] * other.entries[k][j]
                    row.append(acc)
                rows.append(tuple(row))
            return FusionMatrix(self.p, tuple(rows))
        if isinstance(other, (int, Fraction, CycNum)):
            return FusionMatrix(
                self.p, tuple(tuple(e * other for e in row) for row in self.entries)
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self * other
        return NotImplemented

    def __sub__(self, other: "FusionMatrix") -> "FusionMatrix":
        if self.p != other.p or self.size != other.size:
            raise ValueError("matrix shapes or ranks differ")
        return FusionMatrix(
            self.p,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def apply(self, vec):
        """Matrix-vector product."""
        if len(vec) != self.size:
            raise ValueError("vector length mismatch")
        return tuple(
            sum(row[i] * vec[i] for i in range(self.size)) for row in self.entries
        )

    def det(self):
        """Fraction-free (Bareiss) determinant; exact over Q or Q(zeta_p)."""
        n = self.size
        mat = [
            [e if isinstance(e, CycNum) else Fraction(e) for e in row]
            for row in self.entries
        ]
        sign = 1
        prev = None
        for k in range(n - 1):
            if not mat[k][k]:
                for i in range(k + 1, n):
                    if mat[i][k]:
                        mat[k], mat[i] = mat[i], mat[k]
                        sign = -sign
                        break
                else:
                    zero = mat[k][k] * 0
                    return zero
            pivot = mat[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = pivot * mat[i][j] - mat[i][k] * mat[k][j]
                    mat[i][j] = num / prev if prev is not None else num
            prev = pivot
        return mat[n - 1][n - 1] * sign


def mul_matrix_even(x: FusionElement) -> FusionMatrix:
    """Matrix of multiplication by x in the even-index basis ordering.

    Column i holds the even-basis coordinates of x * e_{2i}.
    """
    p = x.p
    d = _rank(p)
    cols = [(x * cheb_vector(p, 2 * i)).even_coords() for i in range(d)]
    return FusionMatrix(p, tuple(tuple(cols[i][j] for i in range(d)) for j in range(d)))


@lru_cache(maxsize=None)
def alternating_element(p: int) -> FusionElement:
    """sum over n of (-1)^n (d - n) e_{2n}."""
    d = _rank(p)
    acc = cheb_vector(p, 0) * d
    for n in range(1, d):
        acc = acc + cheb_vector(p, 2 * n) * ((-1) ** n * (d - n))
    return acc


@lru_cache(maxsize=None)
def counting_element(p: int) -> FusionElement:
    """sum over n of (d - n) e_{2n}; also equals sum of e_{2n} squared."""
    d = _rank(p)
    acc = cheb_vector(p, 0) * d
    for n in range(1, d):
        acc = acc + cheb_vector(p, 2 * n) * (d - n)
    return acc


def _matrix_power_entry(p: int, g: int, c: int, elem: FusionElement) -> int:
    d = _rank(p)
    if g < 0:
        raise ValueError("genus must be >= 0")
    if not 0 <= c <= d - 1:
        raise ValueError(f"half-color must lie in 0..{d - 1}, got {c}")
    mat = mul_matrix_even(elem)
    vec = tuple(1 if j == 0 else 0 for j in range(d))
    for _ in range(g):
        vec = mat.apply(vec)
    val = vec[c]
    if isinstance(val, Fraction):
        if val.denominator != 1:
            raise ArithmeticError("matrix power entry is not an integer")
        val = val.numerator
    return val


def delta_via_matrix(p: int, g: int, c: int) -> int:
    """Signed count even - odd from the g-th power of the alternating matrix."""
    val = _matrix_power_entry(p, g, c, alternating_element(p))
    return -val if c % 2 else val


def total_via_matrix(p: int, g: int, c: int) -> int:
    """Total count from the g-th power of the counting matrix."""
    return _matrix_power_entry(p, g, c, counting_element(p))


# -- exact diagonalization over Q(zeta_p) ------------------------------------


@lru_cache(maxsize=None)
def smatrix(p: int) -> FusionMatrix:
    """S_{ij} = q^((2i+1)(2j+1)) - q^(-(2i+1)(2j+1)) with q = zeta_p.

    Satisfies S*S = -p * identity, so S^-1 = -(1/p) S.
    """
    d = _rank(p)
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            k = (2 * i + 1) * (2 * j + 1)
            row.append(monomial(p, k) - monomial(p, -k))
        rows.append(tuple(row))
    return FusionMatrix(p, tuple(rows))


@lru_cache(maxsize=None)
def qmatrix(p: int) -> FusionMatrix:
    """Diagonal matrix of the z-eigenvalues -q^(2j+1) - q^(-(2j+1))."""
    d = _rank(p)
    zero = CycNum.scalar(p, 0)
    rows = []
    for j in range(d):
        diag = -(monomial(p, 2 * j + 1) + monomial(p, -(2 * j + 1)))
        rows.append(tuple(diag if i == j else zero for i in range(d)))
    return FusionMatrix(p, tuple(rows))


@lru_cache(maxsize=None)
def alternating_eigenvalue(p: int) -> CycNum:
    """Eigenvalue of the alternating element at the fundamental embedding:
    ceil(d/2) + sum_{k=1}^{d-1} (-1)^k ceil((d-k)/2) (q^2k + q^-2k).

    Its Galois images under zeta -> zeta^(2j+1) give the full spectrum.
    """
    d = _rank(p)
    acc = CycNum.scalar(p, (d + 1) // 2)
    for k in range(1, d):
        w = (monomial(p, 2 * k) + monomial(p, -2 * k)) * ((d - k + 1) // 2)
        acc = acc - w if k % 2 else acc + w
    return acc


@lru_cache(maxsize=None)
def counting_eigenvalue(p: int) -> CycNum:
    """Eigenvalue of the counting element: -p / (q - q^-1)^2."""
    h2 = (monomial(p, 1) - monomial(p, -1)) ** 2
    return CycNum.scalar(p, -p) * inv(h2)


def _galois_half_sum_int(p: int, w: CycNum) -> int:
    """-(1/p) * sum_{j=1}^{d} G_j(w) for w in the real subfield; must be an
    integer (the half-sum is half the field trace)."""
    d = (p - 1) // 2
    acc = galois(w, 1)
    for j in range(2, d + 1):
        acc = acc + galois(w, j)
    val = acc.as_rational() * Fraction(-1, p)
    if val.denominator != 1:
        raise ArithmeticError("galois half-sum did not reduce to an integer")
    return val.numerator


def _bracket(p: int, c: int) -> CycNum:
    """(q^(2c+1) - q^-(2c+1)) * (q - q^-1)."""
    k = 2 * c + 1
    return (monomial(p, k) - monomial(p, -k)) * (monomial(p, 1) - monomial(p, -1))


def galois_sum_delta(p: int, g: int, c: int) -> int:
    """Signed count even - odd as a closed Galois sum over Q(zeta_p)."""
    d = _rank(p)
    if g < 0 or not 0 <= c <= d - 1:
        raise ValueError("need genus >= 0 and half-color in range")
    w = _bracket(p, c) * alternating_eigenvalue(p) ** g
    val = _galois_half_sum_int(p, w)
    return -val if c % 2 else val


def galois_sum_total(p: int, g: int, c: int) -> int:
    """Total count as the same Galois sum with the counting eigenvalue."""
    d = _rank(p)
    if g < 0 or not 0 <= c <= d - 1:
        raise ValueError("need genus >= 0 and half-color in range")
    w = _bracket(p, c) * counting_eigenvalue(p) ** g
    return _galois_half_sum_int(p, w)


# -- twist Vandermonde (Hopf pairing) matrix ---------------------------------


@lru_cache(maxsize=None)
def hopf_vandermonde(p: int) -> FusionMatrix:
    """H_{ij} = (-1)^j [j+1] mu_j^i with twist eigenvalues
    mu_j = zeta^((d+1) j (j+2)), for i, j = 0..d-1."""
    d = _rank(p)
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            entry = quantum_int(p, j + 1) * monomial(p, (d + 1) * j * (j + 2) * i)
            if j % 2:
                entry = -entry
            row.append(entry)
        rows.append(tuple(row))
    return FusionMatrix(p, tuple(rows))


@dataclass(frozen=True)
class HopfCertificate:
    """Determinant data: h-adic valuation plus the cofactor's norm (+-1)."""

    p: int
    valuation: int
    unit_norm: int


def hopf_certificate(p: int) -> HopfCertificate:
    """h-adic valuation of det(H), certifying that det(H)/h^v is a unit.

    The expected valuation is d(d-1)/2; callers compare against that.
    """
    det = hopf_vandermonde(p).det()
    v = h_valuation(det)
    if v == INFINITE:
        raise ArithmeticError(f"twist Vandermonde determinant vanished at p={p}")
    h = CycNum(p, [1, -1])
    unit = det / h**v
    if not unit.is_integral():
        raise ArithmeticError("determinant cofactor left the ring of integers")
    n = norm(unit)
    if n not in (1, -1):
        raise ArithmeticError(f"determinant cofactor is not a unit: norm {n}")
    return HopfCertificate(p=p, valuation=int(v), unit_norm=int(n))
