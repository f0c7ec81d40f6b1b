"""Power sums, complete homogeneous and elementary symmetric polynomials.

Symmetric polynomials can be rewritten in the elementary basis: an
"e-polynomial" is an ordinary :class:`Polynomial` in ``n`` variables whose
``i``-th variable stands for ``e_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .polycore import LEX, Polynomial, format_terms
from .verdict import Verdict

__all__ = [
    "SymFamily",
    "power_sum",
    "complete",
    "elementary",
    "generate",
    "parse_family",
    "parse_families",
    "is_symmetric",
    "to_elementary",
    "family_in_e",
    "expand_elementary",
    "format_elementary",
    "verify_newton",
]

_KINDS = {"p": "power-sum", "h": "complete-homogeneous", "e": "elementary"}


@dataclass(frozen=True)
class SymFamily:
    kind: str
    degree: int
    nvars: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"family kind must be one of p, h, e; got {self.kind!r}")
        if self.degree < 0 or self.nvars < 1:
            raise ValueError(f"invalid family {self.kind}:{self.degree} in {self.nvars} variables")

    @property
    def token(self):
        return f"{self.kind}:{self.degree}"

    def polynomial(self):
        return generate(self)


@lru_cache(maxsize=None)
def power_sum(m, n):
    if m == 0:
        return Polynomial.constant(n, n)
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = m
        terms[tuple(e)] = 1
    return Polynomial._raw(terms, n)


@lru_cache(maxsize=None)
def complete(m, n):
    terms = {}
    for combo in combinations_with_replacement(range(n), m):
        e = [0] * n
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = 1
    return Polynomial._raw(terms, n)


@lru_cache(maxsize=None)
def elementary(m, n):
    terms = {}
    for combo in combinations(range(n), m):
        e = [0] * n
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = 1
    return Polynomial._raw(terms, n)


_GENERATORS = {"p": power_sum, "h": complete, "e": elementary}


def generate(fam):
    return _GENERATORS[fam.kind](fam.degree, fam.nvars)


def parse_family(token, nvars):
    """``"p:3"`` -> SymFamily('p', 3, nvars)."""
    kind, sep, deg = token.strip().partition(":")
    if not sep or not deg.strip().isdigit():
        raise ValueError(f"bad family token {token!r}; expected e.g. 'p:3'")
    return SymFamily(kind.strip().lower(), int(deg), nvars)


def parse_families(text, nvars):
    return [parse_family(tok, nvars) for tok in text.split(",") if tok.strip()]


def is_symmetric(f):
    """Invariance under the transposition (x1 x2) and the n-cycle."""
    n = f.nvars
    if n == 1:
        return True
    swap = [1, 0] + list(range(2, n))
    cycle = [(i + 1) % n for i in range(n)]
    return f.permute(swap) == f and f.permute(cycle) == f


def _e_monomial_expansion(exps, n, cache):
    # expansion of prod e_i^{exps[i]} in x-variables, memoised per call site
    if exps in cache:
        return cache[exps]
    result = Polynomial.constant(1, n)
    for i, k in enumerate(exps):
        if k:
            result = result * _e_power(i + 1, k, n)
    cache[exps] = result
    return result


@lru_cache(maxsize=None)
def _e_power(i, k, n):
    return elementary(i, n) ** k


def to_elementary(f):
    """Rewrite a symmetric polynomial as an e-polynomial.

    Repeatedly cancels the lex-leading term ``c*x^a`` (``a`` is a partition)
    with ``c * e1^(a1-a2) * ... * en^an``.
    """
    if not is_symmetric(f):
        raise ValueError("to_elementary needs a symmetric polynomial")
    n = f.nvars
    out = {}
    cache = {}
    rest = f
    while rest:
        lead, c = rest.leading_term(LEX)
        a = tuple(lead) + (0,)
        exps = tuple(a[i] - a[i + 1] for i in range(n))
        out[exps] = out.get(exps, 0) + c
        rest = rest - _e_monomial_expansion(exps, n, cache).scale(c)
    return Polynomial(out, n)


def _e_var(i, n):
    return Polynomial.variable(i - 1, n) if 1 <= i <= n else Polynomial.zero(n)


@lru_cache(maxsize=None)
def _p_in_e(m, n):
    # p_m = sum_{i<m} (-1)^(i-1) e_i p_{m-i} + (-1)^(m-1) m e_m
    if m == 0:
        return Polynomial.constant(n, n)
    out = _e_var(m, n).scale(m if m % 2 else -m)
    for i in range(1, min(m - 1, n) + 1):
        term = _e_var(i, n) * _p_in_e(m - i, n)
        out = out + (term if i % 2 else -term)
    return out


@lru_cache(maxsize=None)
def _h_in_e(m, n):
    # h_m = sum_{i=1}^{m} (-1)^(i-1) e_i h_{m-i}
    if m == 0:
        return Polynomial.constant(1, n)
    out = Polynomial.zero(n)
    for i in range(1, min(m, n) + 1):
        term = _e_var(i, n) * _h_in_e(m - i, n)
        out = out + (term if i % 2 else -term)
    return out


def family_in_e(fam):
    """e-polynomial of a p/h/e family via the Newton recursions."""
    if fam.kind == "e":
        if fam.degree == 0:
            return Polynomial.constant(1, fam.nvars)
        return _e_var(fam.degree, fam.nvars)
    if fam.kind == "p":
        return _p_in_e(fam.degree, fam.nvars)
    return _h_in_e(fam.degree, fam.nvars)


def expand_elementary(g, n=None):
    """Substitute ``e_i`` into an e-polynomial; inverse of :func:`to_elementary`."""
    if n is None:
        n = g.nvars
    for exps in g.terms:
        if any(k for k in exps[n:]):
            raise ValueError(f"e-polynomial references e_i with i > {n}")
    cache = {}
    total = Polynomial.zero(n)
    for exps, c in g.items():
        head = tuple(exps[:n]) + (0,) * max(0, n - len(exps))
        total = total + _e_monomial_expansion(head, n, cache).scale(c)
    return total


def format_elementary(g):
    if not g:
        return "0"
    order = LEX
    return format_terms([(e, g.coefficient(e)) for e in order.sorted(g.terms)], var="e")


def verify_newton(n, upto):
    """Check both Newton identities in ``n`` variables for degrees ``1..upto``.

    ``m*e_m = sum_{i=1}^m (-1)^(i-1) e_{m-i} p_i`` and
    ``sum_{i=0}^m (-1)^i e_i h_{m-i} = 0``.
    """
    if n < 1 or upto < 1:
        raise ValueError("need n >= 1 and upto >= 1")
    for m in range(1, upto + 1):
        lhs = elementary(m, n).scale(m)
        rhs = Polynomial.zero(n)
        for i in range(1, m + 1):
            term = elementary(m - i, n) * power_sum(i, n)
            rhs = rhs + (term if i % 2 else -term)
        if lhs != rhs:
            return Verdict(False, "newton", {"n": n, "failing_degree": m, "identity": "e-p"})
        total = Polynomial.zero(n)
        for i in range(0, m + 1):
            term = elementary(i, n) * complete(m - i, n)
            total = total + (-term if i % 2 else term)
        if total:
            return Verdict(False, "newton", {"n": n, "failing_degree": m, "identity": "e-h"})
    return Verdict(True, "newton", {"n": n, "upto": upto})
