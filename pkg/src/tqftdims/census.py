"""Brute-force census of small admissible colorings of lollipop trees.

A lollipop tree of genus g with trunk color 2c is a caterpillar: stick
vertices u_1..u_g along a path, a loop hanging off each u_i, and the trunk
edge (colored 2c) attached at u_1.  Half-colors are recorded: a_i for the
stick edge 2a_i, b_i so the i-th loop carries color a_i + b_i, and e_i for
the chain edge 2e_i between u_i and u_(i+1).  Parity conditions force all
non-loop colors even, which is why chains are enumerated as half-colors
from the start.

Admissibility at a trivalent vertex with colors (i, j, k):
even sum, |i - j| <= k <= i + j, and i + j + k <= 2p - 4.  Smallness bounds
every loop color by (p-3)/2.  The far end u_g has degree two and is modeled
with a phantom color-0 edge, which pins a_g to the incoming chain color.

This module is the independent oracle: it never uses the transfer
recursion, fusion matrices, or any closed form beyond reading off ranges
from the defining inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cyclotomic import is_prime

__all__ = [
    "Coloring",
    "LollipopTree",
    "Parity",
    "beta_eta_bruteforce",
    "beta_eta_closed",
    "coloring_record",
    "count_parities",
    "enumerate_colorings",
    "parity",
    "state_estimate",
]


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class LollipopTree:
    """Validated shape parameters: prime p >= 5, genus g >= 1, trunk half-color c."""

    p: int
    g: int
    c: int

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p < 5:
            raise ValueError(f"p must be a prime >= 5, got {self.p}")
        if self.g < 1:
            raise ValueError(f"genus must be >= 1, got {self.g}")
        if not 0 <= self.c <= self.d - 1:
            raise ValueError(
                f"trunk half-color must lie in 0..{self.d - 1} for p={self.p}, got {self.c}"
            )

    @property
    def d(self) -> int:
        return (self.p - 1) // 2


@dataclass(frozen=True)
class Coloring:
    """Half-color data of one admissible small coloring."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    e: tuple[int, ...]

    @property
    def g(self) -> int:
        return len(self.a)


def parity(coloring: Coloring, c: int) -> Parity:
    """Parity class of a coloring: even iff c + sum(a_i) is even.

    The one special case (g, c) = (2, 0) is declared even outright; there
    admissibility pins a_1 = a_2, so the general rule agrees.
    """
    if coloring.g == 2 and c == 0:
        return Parity.EVEN
    return Parity.EVEN if (c + sum(coloring.a)) % 2 == 0 else Parity.ODD


def enumerate_colorings(p: int, g: int, c: int):
    """Yield every small admissible coloring, in lexicographic order.

    The order key is the flat tuple (a_1, b_1, e_1, a_2, b_2, e_2, ..., a_g, b_g).
    """
    tree = LollipopTree(p, g, c)
    d = tree.d
    top = p - 2
    a_buf = [0] * g
    b_buf = [0] * g
    e_buf = [0] * (g - 1)

    def walk(i: int, x: int):
        if i == g - 1:
            # Degree-two far end: the stick half-color must equal the
            # incoming chain color x.
            a_buf[i] = x
            for b in range(d - x):
                b_buf[i] = b
                yield Coloring(tuple(a_buf), tuple(b_buf), tuple(e_buf))
            return
        for a in range(d):
            a_buf[i] = a
            lo = abs(x - a)
            hi = min(x + a, top - x - a, d - 1)
            if lo > hi:
                continue
            for b in range(d - a):
                b_buf[i] = b
                for e in range(lo, hi + 1):
                    e_buf[i] = e
                    yield from walk(i + 1, e)

    yield from walk(0, c)


def count_parities(p: int, g: int, c: int) -> tuple[int, int]:
    """Return (even_count, odd_count) by walking the full coloring tree.

    Same search as enumerate_colorings, with counters instead of objects.
    """
    tree = LollipopTree(p, g, c)
    d = tree.d
    top = p - 2
    counts = [0, 0]

    def walk(i: int, x: int, par: int) -> None:
        if i == g - 1:
            fin = (par + x) & 1
            for _b in range(d - x):
                counts[fin] += 1
            return
        for a in range(d):
            lo = abs(x - a)
            hi = min(x + a, top - x - a, d - 1)
            if lo > hi:
                continue
            nxt = (par + a) & 1
            for _b in range(d - a):
                for e in range(lo, hi + 1):
                    walk(i + 1, e, nxt)

    walk(0, c, c & 1)
    # (g, c) = (2, 0): with a_1 = a_2 forced, every coloring is even.
    if (g, c) == (2, 0) and counts[1]:
        raise ArithmeticError("odd coloring found where the parity convention forbids it")
    return counts[0], counts[1]


def beta_eta_bruteforce(p: int, c1: int, c2: int) -> tuple[int, int]:
    """Balanced/unbalanced coloring counts of the genus-one two-point tree.

    The stick vertex carries colors (2c1, 2c2, 2a) and the loop contributes
    the usual smallness range for b.  Balanced means a + c1 + c2 even.
    """
    d = _check_pair(p, c1, c2)
    beta = eta = 0
    lo = abs(c1 - c2)
    hi = min(c1 + c2, (p - 2) - c1 - c2)
    for a in range(lo, hi + 1):
        n_b = d - a
        if (a + c1 + c2) % 2 == 0:
            beta += n_b
        else:
            eta += n_b
    return beta, eta


def beta_eta_closed(p: int, c1: int, c2: int) -> tuple[int, int]:
    """Closed forms: with m = min(c1, c2), M = max(c1, c2),
    balanced = (m + 1)(d - M) and unbalanced = m(d - M)."""
    d = _check_pair(p, c1, c2)
    m, big = min(c1, c2), max(c1, c2)
    return (m + 1) * (d - big), m * (d - big)


def _check_pair(p: int, c1: int, c2: int) -> int:
    if not is_prime(p) or p < 5:
        raise ValueError(f"p must be a prime >= 5, got {p}")
    d = (p - 1) // 2
    for c in (c1, c2):
        if not 0 <= c <= d - 1:
            raise ValueError(f"half-color must lie in 0..{d - 1} for p={p}, got {c}")
    return d


def coloring_record(coloring: Coloring, c: int) -> str:
    """Flat serialization: g;c;a_1,b_1,...,a_g,b_g;e_1,...,e_(g-1);parity."""
    ab = ",".join(str(v) for pair in zip(coloring.a, coloring.b) for v in pair)
    es = ",".join(str(v) for v in coloring.e)
    return f"{coloring.g};{c};{ab};{es};{parity(coloring, c).value}"


def state_estimate(p: int, g: int) -> int:
    """Crude upper bound on search states, used by the CLI size guard."""
    d = (p - 1) // 2
    pairs = d * (d + 1) // 2
    return pairs * (d * pairs) ** (g - 1)
