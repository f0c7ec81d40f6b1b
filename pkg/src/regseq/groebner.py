"""Buchberger's algorithm, normal forms and ideal membership over Q.

Internally monomials are packed into Python ints whose integer order is the
monomial order and whose sum is the monomial product, and polynomials are
``{packed monomial: int}`` dicts kept primitive.  Homogeneous ideals are
processed degree by degree (normal selection strategy), so a run may stop at
a degree cutoff and later resume.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .polycore import GREVLEX, Polynomial

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "CutoffExceeded",
    "buchberger",
    "normal_form",
    "is_member",
    "s_polynomial",
]

_WIDTH = 16  # bits per exponent field; exponents must stay below 2**15


class CutoffExceeded(RuntimeError):
    """A computation needed a complete basis but only a truncated one exists."""


class _Ring:
    """Packing of exponent vectors for one (nvars, order) pair."""

    def __init__(self, nvars, order):
        self.n = nvars
        self.order = order
        self.perm = tuple(order.perm) if order.perm is not None else tuple(range(nvars))
        if sorted(self.perm) != list(range(nvars)):
            raise ValueError(f"order permutation {self.perm} does not fit {nvars} variables")
        self.lex = order.kind == "lex"
        self.mask = (1 << (_WIDTH * nvars)) - 1
        self.guard = sum(1 << (_WIDTH * i + _WIDTH - 1) for i in range(nvars))
        self.fmask = (1 << _WIDTH) - 1
        # bit shift of original variable i inside the packed exponent word
        if self.lex:
            self.shift = [0] * nvars
            for pos, var in enumerate(self.perm):
                self.shift[var] = _WIDTH * (nvars - 1 - pos)
        else:
            self.shift = [0] * nvars
            for pos, var in enumerate(self.perm):
                self.shift[var] = _WIDTH * pos

    def encode(self, exps):
        packed = 0
        for e, s in zip(exps, self.shift):
            if e >= 1 << (_WIDTH - 1):
                raise OverflowError("exponent too large for the packed representation")
            packed |= e << s
        if self.lex:
            return packed
        return (sum(exps) << (_WIDTH * self.n)) - packed

    def packed(self, key):
        """Exponent word (one field per variable) of a monomial key."""
        return key if self.lex else (-key) & self.mask

    def decode(self, key):
        p = self.packed(key)
        return tuple((p >> s) & self.fmask for s in self.shift)

    def degree(self, key):
        if self.lex:
            return sum(self.decode(key))
        return (key + self.packed(key)) >> (_WIDTH * self.n)

    def divides(self, a, b):
        g = self.guard
        return ((self.packed(b) | g) - self.packed(a)) & g == g

    def lcm(self, a, b):
        return self.encode([max(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def coprime(self, a, b):
        pa, pb = self.packed(a), self.packed(b)
        fm = self.fmask
        for s in self.shift:
            if (pa >> s) & fm and (pb >> s) & fm:
                return False
        return True

    # -- conversion ---------------------------------------------------------
    def from_poly(self, f):
        """Integer primitive dict and the rational factor: f = factor * dict."""
        den = 1
        for c in f._terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        out = {}
        for e, c in f._terms.items():
            out[self.encode(e)] = int(c * den)
        cont = _content(out)
        if cont > 1:
            out = {k: v // cont for k, v in out.items()}
        return out, Fraction(cont, den)

    def to_poly(self, d, factor=1):
        return Polynomial(
            {self.decode(k): Fraction(v) * factor for k, v in d.items()}, self.n)


def _content(d):
    g = 0
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def _primitive(d):
    """Divide by content and make the leading coefficient positive."""
    if not d:
        return d
    g = _content(d)
    if d[max(d)] < 0:
        g = -g
    if g != 1:
        d = {k: v // g for k, v in d.items()}
    return d


class _Element:
    __slots__ = ("poly", "lm", "lc", "deg", "active")

    def __init__(self, poly, lm, deg):
        self.poly = poly
        self.lm = lm
        self.lc = poly[lm]
        self.deg = deg
        self.active = True


class _Engine:
    """Resumable Buchberger state for one generating set."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.homogeneous = all(_is_homog(ring, g) for g in gens)
        self.basis = []
        self.pairs = []  # heap of (degree, lcm, i, j)
        self.pending = sorted(((ring.degree(max(g)), i, g) for i, g in enumerate(gens)),
                              key=lambda t: (t[0], t[1]))
        self.done_degree = -1
        self._divisor_cache = {}
        if not self.homogeneous:
            # sugar-free processing; no meaningful degree cutoff
            for _, _, g in self.pending:
                self._insert(self._reduce(g)[0])
            self.pending = []

    @property
    def complete(self):
        return not self.pairs and not self.pending

    # -- reduction ------------------------------------------------------------
    def _divisor(self, m):
        basis = self.basis
        hit = self._divisor_cache.get(m)
        start = 0
        if hit is not None:
            if hit[0] is not None or hit[1] == len(basis):
                return hit[0]
            start = hit[1]
        ring = self.ring
        g = ring.guard
        pm = ring.packed(m) | g
        found = None
        for idx in range(start, len(basis)):
            el = basis[idx]
            if (pm - ring.packed(el.lm)) & g == g:
                found = el
                break
        self._divisor_cache[m] = (found, len(basis))
        return found

    def _reduce(self, f, top_only=False):
        """Full normal form of the int dict ``f``; returns (remainder, scale).

        ``remainder == scale * NF(f)`` with ``scale`` a positive Fraction.
        """
        f = dict(f)
        rem = {}
        scale = Fraction(1)
        heap = [-m for m in f]
        heapq.heapify(heap)
        steps = 0
        while heap:
            m = -heapq.heappop(heap)
            c = f.pop(m, 0)
            if not c:
                continue
            el = self._divisor(m)
            if el is None:
                rem[m] = c
                if top_only:
                    for k in f:
                        rem[k] = f[k]
                    f = {}
                    break
                continue
            lc = el.lc
            q = gcd(c, lc)
            a = lc // q
            b = c // q
            if a < 0:
                a, b = -a, -b
            if a != 1:
                for k in f:
                    f[k] *= a
                for k in rem:
                    rem[k] *= a
                scale *= a
            shift = m - el.lm
            get = f.get
            for k, v in el.poly.items():
                if k == el.lm:
                    continue
                k2 = k + shift
                old = get(k2)
                if old is None:
                    f[k2] = -b * v
                    heapq.heappush(heap, -k2)
                else:
                    nv = old - b * v
                    if nv:
                        f[k2] = nv
                    else:
                        del f[k2]
            steps += 1
            if steps % 64 == 0:
                g = gcd(_content(f), _content(rem)) if rem else _content(f)
                if g > 1:
                    f = {k: v // g for k, v in f.items()}
                    rem = {k: v // g for k, v in rem.items()}
                    scale /= g
        return rem, scale

    # -- basis growth -----------------------------------------------------------
    def _insert(self, h):
        if not h:
            return
        h = _primitive(h)
        ring = self.ring
        lm = max(h)
        el = _Element(h, lm, ring.degree(lm))
        idx = len(self.basis)
        lcm = ring.lcm
        divides = ring.divides
        coprime = ring.coprime
        active = [i for i, g in enumerate(self.basis) if g.active]
        # Gebauer-Moeller update
        cand = [(i, lcm(self.basis[i].lm, lm)) for i in active]
        lcms = {L for _, L in cand}
        groups = {}
        for i, L in cand:
            if any(L2 != L and divides(L2, L) for L2 in lcms):
                continue
            groups.setdefault(L, []).append(i)
        new_pairs = []
        for L, members in groups.items():
            if any(coprime(self.basis[i].lm, lm) for i in members):
                continue
            new_pairs.append((members[0], L))
        old = []
        for p in self.pairs:
            _, L, i, j = p
            if (divides(lm, L)
                    and lcm(self.basis[i].lm, lm) != L
                    and lcm(self.basis[j].lm, lm) != L):
                continue
            old.append(p)
        for i, L in new_pairs:
            old.append((ring.degree(L), L, i, idx))
        heapq.heapify(old)
        self.pairs = old
        for i in active:
            if divides(lm, self.basis[i].lm):
                self.basis[i].active = False
        self.basis.append(el)

    def _spoly(self, i, j, L):
        gi, gj = self.basis[i], self.basis[j]
        si = L - gi.lm
        sj = L - gj.lm
        q = gcd(gi.lc, gj.lc)
        a = gj.lc // q
        b = gi.lc // q
        out = {}
        for k, v in gi.poly.items():
            out[k + si] = a * v
        for k, v in gj.poly.items():
            k2 = k + sj
            nv = out.get(k2, 0) - b * v
            if nv:
                out[k2] = nv
            else:
                out.pop(k2, None)
        return out

    def run(self, cutoff=None, on_degree=None):
        """Process pairs up to ``cutoff`` (None: to completion).

        ``on_degree(d)`` is called after each finished degree of a homogeneous
        computation; a true return value stops the run early.
        """
        if cutoff is not None and not self.homogeneous:
            raise ValueError("a degree cutoff needs homogeneous generators")
        while self.pairs or self.pending:
            nxt = []
            if self.pairs:
                nxt.append(self.pairs[0][0])
            if self.pending:
                nxt.append(self.pending[0][0])
            d = min(nxt)
            if cutoff is not None and d > cutoff:
                break
            if self.homogeneous:
                while self.pending and self.pending[0][0] == d:
                    _, _, g = self.pending.pop(0)
                    self._insert(self._reduce(g)[0])
            while self.pairs and self.pairs[0][0] == d:
                _, L, i, j = heapq.heappop(self.pairs)
                h = self._reduce(self._spoly(i, j, L))[0]
                self._insert(h)
            if self.homogeneous:
                self.done_degree = d
                if on_degree is not None and on_degree(d):
                    return
        if cutoff is not None:
            self.done_degree = max(self.done_degree, cutoff)
        if self.complete:
            self.done_degree = float("inf")

    def valid_upto(self):
        return self.done_degree

    def leading_monomials(self):
        return [el.lm for el in self.basis]

    def reduced(self):
        """Reduced basis (as int dicts, primitive) of the current state."""
        ring = self.ring
        els = sorted(self.basis, key=lambda e: e.lm)
        minimal = []
        for el in els:
            if not any(ring.divides(o.lm, el.lm) for o in minimal):
                minimal.append(el)
        out = []
        sub = _Engine.__new__(_Engine)
        sub.ring = ring
        sub._divisor_cache = {}
        for el in minimal:
            sub.basis = [o for o in minimal if o is not el]
            sub._divisor_cache = {}
            tail = {k: v for k, v in el.poly.items() if k != el.lm}
            rem, scale = sub._reduce(tail)
            # el.lm is not divisible by the others, so scale the head to match
            num, den = scale.numerator, scale.denominator
            poly = {k: v * den for k, v in rem.items()}
            poly[el.lm] = el.lc * num
            out.append(_primitive(poly))
        out.sort(key=max, reverse=True)
        return out


def _is_homog(ring, d):
    degs = {ring.degree(k) for k in d}
    return len(degs) <= 1


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis (monic) plus truncation bookkeeping."""

    polynomials: tuple
    order: object
    complete: bool
    valid_upto: float

    def __iter__(self):
        return iter(self.polynomials)

    def __len__(self):
        return len(self.polynomials)

    def leading_monomials(self):
        return [p.leading_term(self.order)[0] for p in self.polynomials]


class Ideal:
    """Ideal of ``Q[x1..xn]`` with a lazily computed Groebner basis."""

    def __init__(self, generators, nvars=None, order=GREVLEX):
        gens = [g for g in generators if not g.is_zero()]
        if nvars is None:
            if not generators:
                raise ValueError("nvars is required for an ideal without generators")
            nvars = generators[0].nvars
        for g in generators:
            if g.nvars != nvars:
                raise ValueError("all generators must live in the same ring")
        self.generators = tuple(gens)
        self.nvars = nvars
        self.order = order
        self._ring = _Ring(nvars, order)
        self._engine = None

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]}, nvars={self.nvars})"

    @property
    def degrees(self):
        return [g.degree for g in self.generators]

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def _get_engine(self):
        if self._engine is None:
            ring = self._ring
            self._engine = _Engine(ring, [ring.from_poly(g)[0] for g in self.generators])
        return self._engine

    def run(self, cutoff=None, on_degree=None):
        eng = self._get_engine()
        if eng.complete or (cutoff is not None and eng.valid_upto() >= cutoff):
            return eng
        eng.run(cutoff, on_degree)
        return eng

    def groebner_basis(self, cutoff=None):
        eng = self.run(cutoff)
        ring = self._ring
        polys = tuple(ring.to_poly(d).monic(self.order) for d in eng.reduced())
        return GroebnerBasis(polys, self.order, eng.complete, eng.valid_upto())

    def leading_monomials(self, cutoff=None):
        eng = self.run(cutoff)
        return [self._ring.decode(m) for m in eng.leading_monomials()]

    def normal_form(self, f):
        if f.nvars != self.nvars:
            raise ValueError("polynomial and ideal live in different rings")
        if f.is_zero():
            return f
        if not self.generators:
            return f
        ring = self._ring
        if self.is_homogeneous():
            parts = {}
            for e, c in f.items():
                parts.setdefault(sum(e), {})[e] = c
            total = Polynomial.zero(self.nvars)
            for d in sorted(parts):
                eng = self.run(cutoff=d)
                piece, factor = ring.from_poly(Polynomial(parts[d], self.nvars))
                rem, scale = eng._reduce(piece)
                total = total + ring.to_poly(rem, factor / scale)
            return total
        eng = self.run()
        piece, factor = ring.from_poly(f)
        rem, scale = eng._reduce(piece)
        return ring.to_poly(rem, factor / scale)

    def contains(self, f):
        return self.normal_form(f).is_zero()

    __contains__ = contains


def buchberger(ideal, cutoff=None):
    return ideal.groebner_basis(cutoff)


def normal_form(f, ideal):
    return ideal.normal_form(f)


def is_member(f, ideal):
    return ideal.contains(f)


def s_polynomial(f, g, order=GREVLEX):
    (mf, cf), (mg, cg) = f.leading_term(order), g.leading_term(order)
    L = tuple(max(a, b) for a, b in zip(mf, mg))
    uf = tuple(a - b for a, b in zip(L, mf))
    ug = tuple(a - b for a, b in zip(L, mg))
    return f.mul_monomial(uf, Fraction(1) / cf) - g.mul_monomial(ug, Fraction(1) / cg)
