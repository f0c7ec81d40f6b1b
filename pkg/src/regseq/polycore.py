"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` lives in a fixed ring ``Q[x1..xn]``; there is no implicit
embedding between rings with different variable counts.  Coefficients are
Python ints where integral and :class:`fractions.Fraction` otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = [
    "Monomial",
    "MonomialOrder",
    "GREVLEX",
    "LEX",
    "Polynomial",
    "add",
    "mul",
    "leading_term",
    "evaluate",
    "parse_polynomial",
    "monomials_of_degree",
]


class Monomial(tuple):
    """Exponent vector ``(j1, ..., jn)`` standing for ``x1^j1 * ... * xn^jn``."""

    __slots__ = ()

    def __new__(cls, exponents):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @property
    def exponents(self):
        return tuple(self)

    @property
    def degree(self):
        return sum(self)

    @property
    def nvars(self):
        return len(self)

    def __mul__(self, other):
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other):
        return all(a <= b for a, b in zip(self, other))

    def __repr__(self):
        return f"Monomial({tuple(self)})"


@dataclass(frozen=True)
class MonomialOrder:
    """A lexicographic or graded reverse lexicographic monomial order.

    ``perm`` lists variable indices from most to least significant; the
    default is the identity ``x1 > x2 > ... > xn``.
    """

    kind: str = "grevlex"
    perm: tuple = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.perm is not None:
            object.__setattr__(self, "perm", tuple(self.perm))

    def _permuted(self, exps):
        if self.perm is None:
            return tuple(exps)
        return tuple(exps[i] for i in self.perm)

    def key(self, exps):
        """Sort key; a larger key means a larger monomial."""
        e = self._permuted(exps)
        if self.kind == "lex":
            return e
        return (sum(e), tuple(-x for x in reversed(e)))

    def max(self, monomials):
        return max(monomials, key=self.key)

    def sorted(self, monomials, descending=True):
        return sorted(monomials, key=self.key, reverse=descending)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _coerce(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _coerce(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _coerce(Fraction(c))
    raise TypeError(f"coefficient {c!r} is not an exact rational")


class Polynomial:
    """Immutable sparse polynomial: ``{exponent tuple: coefficient}``.

    Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms=None, nvars=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, c in items:
                exps = tuple(int(e) for e in exps)
                c = _coerce(c)
                if nvars is None:
                    nvars = len(exps)
                elif len(exps) != nvars:
                    raise ValueError(
                        f"monomial {exps} does not have {nvars} variables")
                if c:
                    c = clean.get(exps, 0) + c
                    if c:
                        clean[exps] = _coerce(c)
                    else:
                        clean.pop(exps, None)
        if nvars is None:
            raise ValueError("nvars is required for the zero polynomial")
        self._terms = clean
        self._nvars = int(nvars)
        self._hash = None

    @classmethod
    def _raw(cls, terms, nvars):
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._terms = terms
        p._nvars = nvars
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars):
        c = _coerce(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def variable(cls, i, nvars):
        """The variable ``x_{i+1}`` (0-based index)."""
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): 1}, nvars)

    @classmethod
    def monomial(cls, exps, c=1):
        exps = tuple(exps)
        return cls({exps: c}, len(exps))

    # -- accessors --------------------------------------------------------
    @property
    def nvars(self):
        return self._nvars

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return [Monomial(e) for e in self._terms]

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def leading_term(self, order=GREVLEX):
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        m = order.max(self._terms)
        return Monomial(m), self._terms[m]

    def content(self):
        """Positive rational ``c`` with ``self / c`` integral and primitive."""
        num = 0
        den = 1
        for c in self._terms.values():
            if isinstance(c, Fraction):
                num = gcd(num, c.numerator)
                den = den * c.denominator // gcd(den, c.denominator)
            else:
                num = gcd(num, c)
        return Fraction(num, den) if num else Fraction(1)

    def primitive(self, order=GREVLEX):
        """Integer primitive associate with positive leading coefficient."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_term(order)[1] < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self, order=GREVLEX):
        if not self._terms:
            return self
        return self.scale(Fraction(1) / self.leading_term(order)[1])

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self._nvars)
        elif other._nvars != self._nvars:
            raise ValueError(
                f"variable count mismatch: {self._nvars} vs {other._nvars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            c = out.get(e, 0) + c
            if c:
                out[e] = _coerce(c)
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self._nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self._nvars)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self._nvars)
        return Polynomial._raw(
            {e: _coerce(v * c) for e, v in self._terms.items()}, self._nvars)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        if len(self._terms) < len(other._terms):
            a, b = self._terms, other._terms
        else:
            a, b = other._terms, self._terms
        out = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return Polynomial._raw(
            {e: _coerce(c) for e, c in out.items() if c}, self._nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self._nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exps, c=1):
        exps = tuple(exps)
        c = _coerce(c)
        return Polynomial._raw(
            {tuple(x + y for x, y in zip(e, exps)): _coerce(v * c)
             for e, v in self._terms.items()},
            self._nvars,
        )

    def diff(self, i):
        """Partial derivative with respect to ``x_{i+1}``."""
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return Polynomial._raw(out, self._nvars)

    def permute(self, perm):
        """Substitute ``x_{i+1} -> x_{perm[i]+1}``."""
        out = {}
        for e, c in self._terms.items():
            d = [0] * self._nvars
            for i, j in enumerate(perm):
                d[j] = e[i]
            out[tuple(d)] = c
        return Polynomial._raw(out, self._nvars)

    def evaluate(self, point):
        point = list(point)
        if len(point) != self._nvars:
            raise ValueError(
                f"point has {len(point)} coordinates, expected {self._nvars}")
        point = [_coerce(v) for v in point]
        total = 0
        for e, c in self._terms.items():
            t = c
            for v, k in zip(point, e):
                if k:
                    t = t * v ** k
            total += t
        return _coerce(total)

    def substitute(self, images):
        """Replace ``x_{i+1}`` by the polynomial ``images[i]`` (all in one ring)."""
        if len(images) != self._nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars
        powers = [{0: Polynomial.constant(1, target)} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        total = Polynomial.zero(target)
        for e, c in self._terms.items():
            t = Polynomial.constant(c, target)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            total = total + t
        return total

    # -- comparison / display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self._nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def to_string(self, var="x", order=GREVLEX):
        return format_terms(
            [(e, self._terms[e]) for e in order.sorted(self._terms)], var)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, nvars={self._nvars})"


def format_terms(terms, var="x"):
    """Render ``[(exps, coeff), ...]`` in the ``3*x1^2*x2 - 1/2*x3`` grammar."""
    if not terms:
        return "0"
    parts = []
    for exps, c in terms:
        factors = []
        for i, k in enumerate(exps):
            if k == 1:
                factors.append(f"{var}{i + 1}")
            elif k:
                factors.append(f"{var}{i + 1}^{k}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        if parts:
            parts.append(f" {sign} {body}")
        else:
            parts.append(body if sign == "+" else f"-{body}")
    return "".join(parts)


_FACTOR = re.compile(r"^([a-zA-Z]+)(\d+)(?:\^(\d+))?$")
_COEFF = re.compile(r"^\d+(?:/\d+)?$")


def parse_polynomial(text, nvars=None, var="x"):
    """Parse the text grammar, e.g. ``"3*x1^2*x2 - 1/2*x3"``.

    When ``nvars`` is omitted, the largest variable index used fixes it.
    """
    src = text.replace(" ", "")
    if not src:
        raise ValueError("empty polynomial text")
    chunks = re.findall(r"[+-]?[^+-]+", src)
    if "".join(chunks) != src:
        raise ValueError(f"cannot parse polynomial {text!r}")
    parsed = []
    top = 0
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        body = chunk.lstrip("+-")
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = Fraction(1)
        exps = {}
        for factor in body.split("*"):
            if _COEFF.match(factor):
                coeff *= Fraction(factor)
                continue
            m = _FACTOR.match(factor)
            if not m or m.group(1) != var:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            idx = int(m.group(2))
            if idx < 1:
                raise ValueError(f"variable indices start at 1: {factor!r}")
            exps[idx] = exps.get(idx, 0) + int(m.group(3) or 1)
            top = max(top, idx)
        parsed.append((exps, sign * coeff))
    if nvars is None:
        nvars = max(top, 1)
    elif top > nvars:
        raise ValueError(f"{text!r} uses {var}{top} but the ring has {nvars} variables")
    terms = []
    for exps, c in parsed:
        e = [0] * nvars
        for idx, k in exps.items():
            e[idx - 1] = k
        terms.append((tuple(e), c))
    return Polynomial(terms, nvars)


def monomials_of_degree(d, n):
    """All exponent tuples of total degree ``d`` in ``n`` variables."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(d - first, n - 1):
            out.append((first,) + rest)
    return out


def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def leading_term(f, order=GREVLEX):
    return f.leading_term(order)


def evaluate(f, point):
    return f.evaluate(point)
