"""Cyclotomic polynomials and vanishing sums of four n-th roots of unity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

__all__ = [
    "CyclotomicPoly",
    "cyclotomic",
    "divisors",
    "poly_divmod",
    "power_residues",
    "is_zero_in_field",
    "ZeroSum",
    "four_root_zero_sums",
]


def divisors(n):
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_divmod(a, b):
    """Quotient and remainder of integer lists (low degree first) by a monic ``b``."""
    b = _trim(b)
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    r = _trim(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], r
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            q[i - db] = c
            for j, y in enumerate(b):
                r[i - db + j] -= c * y
    return _trim(q), _trim(r[:db])


@dataclass(frozen=True)
class CyclotomicPoly:
    n: int
    coefficients: tuple

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, x):
        return sum(c * x ** i for i, c in enumerate(self.coefficients))

    def __str__(self):
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = str(mag) if i == 0 else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append(("-" if c < 0 else "+", body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])


@lru_cache(maxsize=None)
def cyclotomic(n):
    """``Phi_n`` as the exact quotient of ``x^n - 1`` by ``Phi_d``, ``d | n, d < n``."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num, rem = poly_divmod(num, list(cyclotomic(d).coefficients))
        if rem:
            raise ArithmeticError(f"Phi_{d} does not divide x^{n} - 1")
    return CyclotomicPoly(n, tuple(num))


@lru_cache(maxsize=None)
def power_residues(n):
    """``x^k mod Phi_n`` for ``k = 0..n-1`` as coefficient tuples of length deg Phi_n."""
    phi = list(cyclotomic(n).coefficients)
    deg = len(phi) - 1
    out = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        out.append(tuple(cur))
        # multiply by x, then fold the x^deg term using Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        for i in range(deg):
            cur[i] -= top * phi[i]
    return tuple(out)


def is_zero_in_field(coeffs, n):
    """Whether ``sum coeffs[k] * zeta_n^k`` vanishes (``coeffs`` indexed mod n)."""
    res = power_residues(n)
    acc = [0] * len(res[0])
    for k, c in enumerate(coeffs):
        if c:
            for i, v in enumerate(res[k % n]):
                acc[i] += c * v
    return not any(acc)


@dataclass(frozen=True)
class ZeroSum:
    """Exponents ``a < b < c < d`` with ``zeta^a + zeta^b + zeta^c + zeta^d = 0``."""

    exponents: tuple
    antipodal_pairs: tuple = None

    @property
    def is_antipodal(self):
        return self.antipodal_pairs is not None


def _antipodal_split(quad, n):
    if n % 2:
        return None
    half = n // 2
    a = quad[0]
    for b in quad[1:]:
        if (b - a) % n == half:
            rest = tuple(x for x in quad if x not in (a, b))
            if (rest[1] - rest[0]) % n == half:
                return ((a, b), rest)
    return None


def four_root_zero_sums(n):
    """All 4-subsets of ``Z/n`` whose roots of unity sum to zero, each with its
    decomposition into two antipodal pairs when one exists."""
    res = power_residues(n)
    width = len(res[0])
    out = []
    for quad in combinations(range(n), 4):
        vecs = [res[k] for k in quad]
        if any(sum(v[i] for v in vecs) for i in range(width)):
            continue
        out.append(ZeroSum(quad, _antipodal_split(quad, n)))
    return out
