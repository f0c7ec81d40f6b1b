"""Closed-form residues of p_N / h_N modulo small symmetric ideals.

Each catalog rule stores the residue formulas as originally stated and is
checked two ways:

* in ``Q[x1..xn]``: ``target - expand(residue)`` must lie in the ideal
  (Groebner membership);
* in the ring of symmetric functions ``Q[e1..en]``: the target is reduced
  modulo the generators rewritten in the e-basis.  For symmetric generators
  the ideal meets the symmetric functions exactly in the ideal they generate
  there (average any certificate over the symmetric group), so this normal
  form is a faithful residue.  It yields the "oracle" residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .groebner import Ideal
from .polycore import MonomialOrder, Polynomial
from .symfun import (
    SymFamily,
    expand_elementary,
    family_in_e,
    format_elementary,
    generate,
)
from .verdict import Verdict

__all__ = [
    "Branch",
    "ReductionRule",
    "catalog",
    "get_rule",
    "reduce_to_e",
    "oracle_residue",
    "verify_rule",
    "verify_catalog",
]


@dataclass(frozen=True)
class Branch:
    """Residue for targets of degree ``period*k + remainder``.

    ``coefficient(k)`` and ``exponents(k)`` describe ``c * e1^a1 ... en^an``;
    a branch with ``coefficient is None`` states a zero residue.
    """

    remainder: int
    formula: str
    coefficient: object = None
    exponents: object = None

    @property
    def is_zero(self):
        return self.coefficient is None

    def residue(self, k, n):
        if self.is_zero:
            return Polynomial.zero(n)
        exps = tuple(self.exponents(k))
        exps = exps + (0,) * (n - len(exps))
        return Polynomial({exps: Fraction(self.coefficient(k))}, n)


@dataclass(frozen=True)
class ReductionRule:
    id: str
    family: str
    nvars: int
    modulus: tuple
    period: int
    branches: tuple
    note: str = ""

    def modulus_tokens(self):
        return ",".join(f"{fam}:{d}" for fam, d in self.modulus)

    def branch(self, r):
        for b in self.branches:
            if b.remainder == r:
                return b
        raise KeyError(r)

    def target_degree(self, k, r):
        return self.period * k + r


def _e(n, **powers):
    # e-monomial exponent vector from keyword powers e1=.., e2=..
    out = [0] * n
    for name, k in powers.items():
        out[int(name[1:]) - 1] = k
    return tuple(out)


def _zero(*rems):
    return tuple(Branch(r, "0") for r in rems)


@lru_cache(maxsize=None)
def catalog():
    """The fixed list of closed-form reduction rules (as stated)."""
    return (
        ReductionRule("p-mod-p1p2", "p", 3, (("p", 1), ("p", 2)), 3, (
            Branch(0, "3*e3^k", lambda k: 3, lambda k: _e(3, e3=k)),
        ) + _zero(1, 2)),
        ReductionRule("p-mod-p1p3", "p", 3, (("p", 1), ("p", 3)), 2, (
            Branch(0, "(-1)^k*e2^k", lambda k: (-1) ** k, lambda k: _e(3, e2=k)),
        ) + _zero(1)),
        ReductionRule("h-mod-h1h2", "h", 3, (("h", 1), ("h", 2)), 3, (
            Branch(0, "-e3^k", lambda k: -1, lambda k: _e(3, e3=k)),
        ) + _zero(1, 2)),
        ReductionRule("h-mod-h1h3", "h", 3, (("h", 1), ("h", 3)), 2, (
            Branch(0, "(-1)^(k-1)*e2^k", lambda k: (-1) ** (k - 1), lambda k: _e(3, e2=k)),
        ) + _zero(1)),
        ReductionRule("h-mod-h1h4", "h", 3, (("h", 1), ("h", 4)), 3, (
            Branch(0, "e3^k", lambda k: 1, lambda k: _e(3, e3=k)),
            Branch(1, "0"),
            Branch(2, "-(k+1)*e2*e3^k", lambda k: -(k + 1), lambda k: _e(3, e2=1, e3=k)),
        )),
        ReductionRule("h-mod-h2h3", "h", 3, (("h", 2), ("h", 3)), 4, (
            Branch(0, "e1^(2k-2)*e2^(k+1)", lambda k: 1, lambda k: _e(3, e1=2 * k - 2, e2=k + 1)),
            Branch(1, "e1^(2k-1)*e2^(k+1)", lambda k: 1, lambda k: _e(3, e1=2 * k - 1, e2=k + 1)),
        ) + _zero(2, 3), note="zero branches printed with modulus (h1,h2); read as (h2,h3)"),
        ReductionRule("p-mod-p1p2p3", "p", 4, (("p", 1), ("p", 2), ("p", 3)), 4, (
            Branch(0, "(-1)^k*4*e4^k", lambda k: 4 * (-1) ** k, lambda k: _e(4, e4=k)),
        ) + _zero(1, 2, 3)),
        ReductionRule("p-mod-p1p2p4", "p", 4, (("p", 1), ("p", 2), ("p", 4)), 3, (
            Branch(0, "4*e3^k", lambda k: 4, lambda k: _e(4, e3=k)),
        ) + _zero(1, 2)),
        ReductionRule("h-mod-h1h2h3", "h", 4, (("h", 1), ("h", 2), ("h", 3)), 4, (
            Branch(0, "(-1)^k*e4^k", lambda k: (-1) ** k, lambda k: _e(4, e4=k)),
        ) + _zero(1, 2, 3)),
        ReductionRule("h-mod-h1h2h4", "h", 4, (("h", 1), ("h", 2), ("h", 4)), 3, (
            Branch(0, "e3^k", lambda k: 1, lambda k: _e(4, e3=k)),
        ) + _zero(1, 2)),
        ReductionRule("h-mod-h2h3h4", "h", 4, (("h", 2), ("h", 3), ("h", 4)), 5, (
            Branch(0, "(-1)^k*e1^k*e4^k", lambda k: (-1) ** k, lambda k: _e(4, e1=k, e4=k)),
            Branch(1, "(-1)^k*e1^(k+1)*e4^k", lambda k: (-1) ** k, lambda k: _e(4, e1=k + 1, e4=k)),
        ) + _zero(2, 3, 4), note="zero branches printed with modulus (h2,h2,h4); read as (h2,h3,h4)"),
    )


def get_rule(rule_id):
    for rule in catalog():
        if rule.id == rule_id:
            return rule
    raise KeyError(rule_id)


def _family(token, n):
    if isinstance(token, SymFamily):
        return token
    kind, deg = token
    return SymFamily(kind, int(deg), n)


@lru_cache(maxsize=None)
def _e_ideal(modulus, n):
    # e_n is the most significant variable, so normal forms prefer low e_i
    order = MonomialOrder("lex", tuple(range(n - 1, -1, -1)))
    gens = [family_in_e(_family(t, n)) for t in modulus]
    return Ideal(gens, n, order)


@lru_cache(maxsize=None)
def _x_ideal(modulus, n):
    return Ideal([generate(_family(t, n)) for t in modulus], n)


def _key(modulus):
    return tuple((t.kind, t.degree) if isinstance(t, SymFamily) else (t[0], int(t[1]))
                 for t in modulus)


def reduce_to_e(target, modulus, n):
    """Residue of a symmetric target modulo symmetric generators, in the e-basis."""
    target = _family(target, n)
    if target.degree < 1:
        raise ValueError("target degree must be positive")
    ideal = _e_ideal(_key(modulus), n)
    return ideal.normal_form(family_in_e(target))


def oracle_residue(rule, k, r):
    """Residue supported on the stated e-monomial, with the coefficient the
    symmetric-function normal form dictates.

    Returns ``(residue, kind)`` where kind is ``"multiple"`` when the true
    residue is a rational multiple of the stated monomial (or both vanish)
    and ``"other"`` when it is not (the normal form itself is returned then).
    """
    n = rule.nvars
    N = rule.target_degree(k, r)
    branch = rule.branch(r)
    nf = reduce_to_e((rule.family, N), rule.modulus, n)
    if nf.is_zero():
        return Polynomial.zero(n), "multiple"
    if branch.is_zero:
        return nf, "other"
    mono = branch.residue(k, n).monic()
    nf_mono = _e_ideal(_key(rule.modulus), n).normal_form(mono)
    if nf_mono.is_zero():
        return nf, "other"
    (m, c), = [nf_mono.leading_term(_e_ideal(_key(rule.modulus), n).order)]
    ratio = Fraction(nf.coefficient(m)) / Fraction(c)
    if nf == nf_mono.scale(ratio):
        return mono.scale(ratio), "multiple"
    return nf, "other"


def _member(rule, N, residue):
    n = rule.nvars
    target = generate(SymFamily(rule.family, N, n))
    return _x_ideal(_key(rule.modulus), n).contains(target - expand_elementary(residue, n))


def _classify(stated, oracle):
    if stated == oracle:
        return None
    if stated.is_zero() or oracle.is_zero():
        return "zero-vs-nonzero"
    if set(stated.terms) != set(oracle.terms):
        return "support"
    if oracle == -stated:
        return "sign"
    return "coefficient"


def verify_rule(rule, k_max=5):
    """Check every branch for ``k = 1..k_max`` in both variants."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    rows = []
    for branch in rule.branches:
        for k in range(1, k_max + 1):
            N = rule.target_degree(k, branch.remainder)
            stated = branch.residue(k, rule.nvars)
            oracle, kind = oracle_residue(rule, k, branch.remainder)
            rows.append({
                "branch": branch.formula,
                "k": k,
                "target": f"{rule.family}{N}",
                "stated": format_elementary(stated),
                "stated_pass": _member(rule, N, stated),
                "oracle": format_elementary(oracle),
                "oracle_kind": kind,
                "oracle_pass": _member(rule, N, oracle),
                "discrepancy": _classify(stated, oracle),
            })
    issues = sorted({(r["branch"], r["discrepancy"]) for r in rows if r["discrepancy"]})
    info = {
        "rule": rule.id,
        "nvars": rule.nvars,
        "modulus": rule.modulus_tokens(),
        "k_max": k_max,
        "stated_pass": all(r["stated_pass"] for r in rows),
        "oracle_pass": all(r["oracle_pass"] for r in rows),
        "discrepancies": [{"branch": b, "kind": d} for b, d in issues],
        "note": rule.note,
        "rows": rows,
    }
    return Verdict(info["oracle_pass"], "reduction-rule", info)


def verify_catalog(k_max=5):
    return [verify_rule(rule, k_max) for rule in catalog()]
