"""Hilbert functions and series of graded quotients ``S/I``.

Two independent routes:

* :func:`hs_from_groebner` reads the series off the leading-term ideal of a
  Groebner basis (pivot recursion on monomial ideals);
* :func:`hf_linear_algebra` computes ``dim (S/I)_d = dim S_d - rank`` of the
  degree-``d`` Macaulay matrix with exact fraction-free elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .groebner import CutoffExceeded, Ideal
from .polycore import GREVLEX, monomials_of_degree

__all__ = [
    "HilbertSeries",
    "HilbertFunctionTable",
    "ci_series",
    "monomial_ideal_numerator",
    "hs_from_groebner",
    "hf_from_groebner",
    "hf_linear_algebra",
    "hf_at_degree",
    "SparseEchelon",
    "ModularEchelon",
    "poly_mul",
]


def poly_mul(a, b):
    """Product of integer coefficient lists (index = power of z)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _add(a, b):
    return _sub(a, [-x for x in b])


def _div_one_minus_z(c):
    """Exact quotient by (1 - z), or None if (1 - z) does not divide."""
    if not c:
        return []
    # c = (1 - z) q  =>  q_i = c_0 + ... + c_i
    q = []
    acc = 0
    for x in c:
        acc += x
        q.append(acc)
    if q[-1] != 0:
        return None
    return _trim(q[:-1])


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(z) / (1 - z)^denominator_exponent`` in cancelled form."""

    numerator: tuple
    denominator_exponent: int

    @classmethod
    def from_fraction(cls, numerator, exponent):
        num = _trim(numerator)
        while exponent > 0:
            q = _div_one_minus_z(num)
            if q is None or not num:
                break
            num, exponent = q, exponent - 1
        return cls(tuple(num), exponent)

    def uncancelled(self, exponent):
        """Numerator over ``(1 - z)^exponent`` (exponent >= our own)."""
        if exponent < self.denominator_exponent:
            raise ValueError("cannot lower the denominator exponent")
        num = list(self.numerator)
        for _ in range(exponent - self.denominator_exponent):
            num = poly_mul(num, [1, -1])
        return num

    def expand(self, upto):
        """Coefficients of z^0..z^upto."""
        coeffs = [0] * (upto + 1)
        for i, c in enumerate(self.numerator):
            if i <= upto:
                coeffs[i] = c
        for _ in range(self.denominator_exponent):
            acc = 0
            for i in range(upto + 1):
                acc += coeffs[i]
                coeffs[i] = acc
        return coeffs

    def first_difference(self, other):
        """Lowest degree where the expansions differ, or None if equal."""
        n = max(self.denominator_exponent, other.denominator_exponent)
        diff = _sub(self.uncancelled(n), other.uncancelled(n))
        for i, c in enumerate(diff):
            if c:
                return i
        return None

    def to_dict(self):
        return {"numerator": list(self.numerator),
                "denominator_exponent": self.denominator_exponent}

    def __str__(self):
        terms = []
        for i, c in enumerate(self.numerator):
            if not c:
                continue
            mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            body = mono if mag == 1 else (str(mag) if i == 0 else f"{mag}*{mono}")
            if i == 0 and mag != 1:
                body = str(mag)
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            num = "0"
        else:
            num = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            for s, b in terms[1:]:
                num += f" {s} {b}"
        return f"({num})/(1-t)^{self.denominator_exponent}"


@dataclass(frozen=True)
class HilbertFunctionTable:
    values: tuple
    computed_upto: int

    def __getitem__(self, d):
        return self.values[d]

    def __len__(self):
        return len(self.values)


def ci_series(degrees, n):
    """Series of a complete intersection of the given degrees in ``n`` variables."""
    degrees = list(degrees)
    if len(degrees) > n:
        raise ValueError(f"{len(degrees)} forms cannot be a regular sequence in {n} variables")
    if any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    num = [1]
    for d in degrees:
        num = poly_mul(num, [1] + [0] * (d - 1) + [-1])
    return HilbertSeries.from_fraction(num, n)


# -- monomial ideals ----------------------------------------------------------

def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(out)


def monomial_ideal_numerator(gens, n):
    """Numerator ``N(z)`` with ``H_{S/M}(z) = N(z)/(1-z)^n`` for monomial ideal M."""
    return _numerator(_minimalize(tuple(map(tuple, gens))), n, {})


def _numerator(gens, n, memo):
    if gens in memo:
        return memo[gens]
    if not gens:
        return [1]
    # pure powers of distinct variables (or a unit) give a product formula
    simple = True
    for g in gens:
        if sum(1 for e in g if e) > 1:
            simple = False
            break
    if simple:
        out = [1]
        for g in gens:
            d = sum(g)
            out = poly_mul(out, [1] + [0] * (d - 1) + [-1]) if d else []
        memo[gens] = out
        return out
    # pivot: the variable occurring most often among non-pure generators
    counts = [0] * n
    for g in gens:
        if sum(1 for e in g if e) > 1:
            for i, e in enumerate(g):
                if e:
                    counts[i] += 1
    var = max(range(n), key=lambda i: counts[i])
    # minimality keeps these exponents below any pure power of var, so the
    # pivot is never already in the ideal
    exps = sorted(g[var] for g in gens if g[var] and sum(1 for e in g if e) > 1)
    k = exps[len(exps) // 2]
    pivot = tuple(k if i == var else 0 for i in range(n))
    # N(M) = N(M + (p)) + z^deg(p) N(M : p)
    with_p = _minimalize(gens + (pivot,))
    colon = _minimalize(tuple(
        tuple(max(0, a - b) for a, b in zip(g, pivot)) for g in gens))
    left = _numerator(with_p, n, memo)
    right = [0] * k + _numerator(colon, n, memo)
    out = _add(left, right)
    memo[gens] = out
    return out


def hs_from_groebner(ideal):
    """Exact Hilbert series of ``S/I`` from a complete Groebner basis."""
    eng = ideal.run()
    if not eng.complete:
        raise CutoffExceeded("Groebner basis incomplete")
    lms = ideal.leading_monomials()
    return HilbertSeries.from_fraction(monomial_ideal_numerator(lms, ideal.nvars), ideal.nvars)


def hf_from_groebner(ideal, upto, on_degree=None):
    """Hilbert function values for degrees ``0..upto`` from a truncated basis."""
    ideal.run(cutoff=upto, on_degree=on_degree)
    lms = ideal.leading_monomials()
    lms = [m for m in lms if sum(m) <= upto]
    num = monomial_ideal_numerator(lms, ideal.nvars)
    return HilbertSeries(tuple(num), ideal.nvars).expand(upto)


# -- linear algebra route ----------------------------------------------------

class SparseEchelon:
    """Row echelon form of integer sparse rows built by fraction-free steps.

    Rows are ``{column: int}``; column 0 is the pivot-preferred column.  Each
    stored row is primitive and its pivot is its smallest column.
    """

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def add(self, row):
        """Insert a row; returns True if it raised the rank."""
        row = {c: v for c, v in row.items() if v}
        pivots = self.pivots
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
                pivots[col] = row
                return True
            a = prow[col]
            b = row[col]
            q = gcd(a, b)
            a //= q
            b //= q
            # row <- a*row - b*prow  (kills column col)
            new = {c: a * v for c, v in row.items()} if a != 1 else dict(row)
            for c, v in prow.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            row = new
        return False


class ModularEchelon:
    """Row echelon form over ``GF(p)``; stored rows are monic at their pivot.

    A full-rank result mod ``p`` implies full rank over ``Q`` (ranks only
    drop under reduction), so vanishing certificates stay sound.
    """

    def __init__(self, p):
        self.p = p
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def add(self, row):
        p = self.p
        row = {c: v % p for c, v in row.items() if v % p}
        pivots = self.pivots
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in row.items()}
                return True
            f = row[col]
            for c, v in prow.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return False


PRIME_MODULUS = 2 ** 31 - 1


def _integer_rows(poly):
    den = 1
    for c in poly.terms.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    return {e: int(c * den) for e, c in poly.items()}


def hf_at_degree(generators, n, d, modulus=None):
    """``dim (S/I)_d`` by exact rank of the degree-``d`` Macaulay matrix.

    With a prime ``modulus`` the rank is taken over ``GF(modulus)``; the
    result is then an upper bound for the rational value (exact when 0).
    """
    # Columns in descending grevlex order and rows fed smallest-leading-
    # monomial first: this keeps fill-in and coefficient growth low.
    cols = GREVLEX.sorted(monomials_of_degree(d, n))
    total = len(cols)
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for g in generators:
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise ValueError("linear-algebra route needs homogeneous generators")
        k = d - g.degree
        if k < 0:
            continue
        base = _integer_rows(g)
        for m in monomials_of_degree(k, n):
            rows.append({index[tuple(a + b for a, b in zip(e, m))]: c
                         for e, c in base.items()})
    rows.sort(key=min, reverse=True)
    ech = SparseEchelon() if modulus is None else ModularEchelon(modulus)
    for row in rows:
        ech.add(row)
        if ech.rank == total:
            return 0
    return total - ech.rank


def hf_linear_algebra(ideal_or_gens, upto, n=None):
    """Hilbert function table of ``S/I`` for degrees ``0..upto``."""
    if isinstance(ideal_or_gens, Ideal):
        gens = list(ideal_or_gens.generators)
        n = ideal_or_gens.nvars
    else:
        gens = list(ideal_or_gens)
        if n is None:
            n = gens[0].nvars
    values = []
    zero_from = None
    for d in range(upto + 1):
        if zero_from is not None:
            # (S/I)_d = 0 forces every higher piece to vanish
            values.append(0)
            continue
        v = hf_at_degree(gens, n, d) if any(g.degree <= d for g in gens if g) else comb(d + n - 1, n - 1)
        values.append(v)
        if v == 0:
            zero_from = d
    return HilbertFunctionTable(tuple(values), upto)
