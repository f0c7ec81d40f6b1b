"""Deciding whether homogeneous forms make up a regular sequence.

The deciding criterion is Hilbert-series equality with the complete
intersection of the same degrees.  Two fast paths short-cut it:

* ``k == n``: the quotient must be Artinian, i.e. vanish in degree
  ``sum(d_i) - n + 1`` (one past the socle degree);
* ``k == 2``: two forms are regular iff they have no common factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy

from .groebner import Ideal
from .hilbert import (
    HilbertSeries,
    _sub,
    ci_series,
    hs_from_groebner,
    monomial_ideal_numerator,
    poly_mul,
)

__all__ = ["RegSeqVerdict", "is_regular_sequence", "classify_triple", "polynomial_gcd_degree"]

METHODS = ("ci-series-equality", "artinian-socle-certificate", "gcd-pair")


@dataclass(frozen=True)
class RegSeqVerdict:
    regular: bool
    method: str
    degrees: tuple
    nvars: int
    witness: dict = None
    case: int = None
    verified: bool = None
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.regular

    def to_dict(self):
        out = {
            "regular": self.regular,
            "method": self.method,
            "degrees": list(self.degrees),
            "nvars": self.nvars,
            "witness": self.witness,
        }
        if self.case is not None:
            out["case"] = self.case
        if self.verified is not None:
            out["verified"] = self.verified
        out.update(self.extra)
        return out


def _check_inputs(gens, n):
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if n is None:
        n = gens[0].nvars
    for g in gens:
        if g.nvars != n:
            raise ValueError(f"generator lives in {g.nvars} variables, expected {n}")
        if g.is_zero() or g.degree < 1:
            raise ValueError("generators must be forms of positive degree")
        if not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
    if len(gens) > n:
        raise ValueError(f"{len(gens)} forms cannot be a regular sequence in {n} variables")
    return gens, n


def _hf_at(lms, n, d):
    num = monomial_ideal_numerator([m for m in lms if sum(m) <= d], n)
    return HilbertSeries(tuple(num), n).expand(d)[d]


def _witness(d, actual, expected):
    return {"degree": d, "hilbert_function": actual, "complete_intersection": expected}


def _graded_scan(gens, n, cutoff):
    """Grow a Groebner basis degree by degree, stopping at the first degree
    where the Hilbert function leaves the complete-intersection value.

    Returns ``(ideal, witness or None)``.
    """
    degrees = [g.degree for g in gens]
    ideal = Ideal(gens, n)
    ci = ci_series(degrees, n)
    horizon = [0]
    found = {}

    def check(d):
        expected = ci.expand(d)
        lms = [ideal._ring.decode(m) for m in ideal._engine.leading_monomials()]
        for e in range(horizon[0], d + 1):
            actual = _hf_at(lms, n, e)
            if actual != expected[e]:
                found["w"] = _witness(e, actual, expected[e])
                return True
        horizon[0] = d + 1
        return False

    ideal.run(cutoff=cutoff, on_degree=check)
    return ideal, found.get("w")


def _series_path(gens, n):
    degrees = [g.degree for g in gens]
    ideal, witness = _graded_scan(gens, n, None)
    if witness is not None:
        return False, witness
    series = hs_from_groebner(ideal)
    ci = ci_series(degrees, n)
    d = series.first_difference(ci)
    if d is None:
        return True, None
    return False, _witness(d, series.expand(d)[d], ci.expand(d)[d])


def _socle_path(gens, n):
    degrees = [g.degree for g in gens]
    top = sum(degrees) - n + 1
    _, witness = _graded_scan(gens, n, top)
    return witness is None, witness


def _to_sympy(f, symbols):
    terms = {e: sympy.Rational(c.numerator, c.denominator) for e, c in f.items()}
    return sympy.Poly.from_dict(terms, *symbols, domain="QQ")


def polynomial_gcd_degree(f, g):
    """Total degree of gcd(f, g) over Q."""
    symbols = sympy.symbols(f"x1:{f.nvars + 1}")
    q = sympy.gcd(_to_sympy(f, symbols), _to_sympy(g, symbols))
    return q.total_degree()


def _gcd_path(gens, n):
    f, g = gens
    e = polynomial_gcd_degree(f, g)
    if e == 0:
        return True, None
    # (f, g) = q * (f/q, g/q) with coprime cofactors J = (f/q, g/q), so
    # H_{S/qJ} = (1 - z^e (1 - (1 - z^a)(1 - z^b))) / (1 - z)^n
    a, b = f.degree - e, g.degree - e
    inner = poly_mul(_one_minus_power(a), _one_minus_power(b))
    ideal_num = _sub([1], inner)
    actual = HilbertSeries.from_fraction(_sub([1], [0] * e + ideal_num), n)
    ci = ci_series([f.degree, g.degree], n)
    d = actual.first_difference(ci)
    witness = _witness(d, actual.expand(d)[d], ci.expand(d)[d])
    witness["gcd_degree"] = e
    return False, witness


def _one_minus_power(d):
    return [0] if d == 0 else [1] + [0] * (d - 1) + [-1]


def is_regular_sequence(gens, n=None, verify=False, method="auto"):
    """Decide whether the homogeneous forms ``gens`` are a regular sequence."""
    gens, n = _check_inputs(gens, n)
    k = len(gens)
    degrees = tuple(g.degree for g in gens)
    if method == "auto":
        if k == n:
            method = "artinian-socle-certificate"
        elif k == 2:
            method = "gcd-pair"
        else:
            method = "ci-series-equality"
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "artinian-socle-certificate":
        if k != n:
            raise ValueError("the socle certificate needs as many forms as variables")
        regular, witness = _socle_path(gens, n)
    elif method == "gcd-pair":
        if k != 2:
            raise ValueError("the gcd test applies to pairs only")
        regular, witness = _gcd_path(gens, n)
    else:
        regular, witness = _series_path(gens, n)
    verified = None
    if verify and method != "ci-series-equality":
        check, _ = _series_path(gens, n)
        verified = check == regular
        if not verified:
            raise RuntimeError(
                f"fast path {method} disagrees with the series criterion on degrees {degrees}")
    return RegSeqVerdict(regular, method, degrees, n, witness, verified=verified)


def classify_triple(fi, fj, fk, n=None):
    """Case 1: fk not in (fi, fj) and regular; case 2: not in but not regular;
    case 3: fk in (fi, fj)."""
    n = n if n is not None else fi.nvars
    if Ideal([fi, fj], n).contains(fk):
        return 3
    return 1 if is_regular_sequence([fi, fj, fk], n).regular else 2


def regular_with_case(gens, n=None, verify=False):
    """Verdict for a triple in three variables, annotated with its case label."""
    v = is_regular_sequence(gens, n, verify=verify)
    if len(gens) == 3 and v.nvars == 3:
        member = Ideal(list(gens[:2]), v.nvars).contains(gens[2])
        case = 3 if member else (1 if v.regular else 2)
        return RegSeqVerdict(v.regular, v.method, v.degrees, v.nvars, v.witness, case, v.verified)
    return v
