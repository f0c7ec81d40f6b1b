import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from regseq.groebner import CutoffExceeded, Ideal, is_member, normal_form, s_polynomial
from regseq.polycore import GREVLEX, LEX, Polynomial, parse_polynomial

from conftest import fams, random_form


def _sympy_gb(gens, n, order):
    syms = sympy.symbols(f"x1:{n + 1}")
    exprs = [sympy.sympify(str(g).replace("^", "**")) for g in gens]
    gb = sympy.groebner(exprs, *syms, order=order)
    out = set()
    for g in gb.exprs:
        poly = sympy.Poly(g, *syms)
        terms = {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}
        out.add(Polynomial(terms, n).monic(GREVLEX if order == "grevlex" else LEX))
    return out


def test_power_sums_three_variables():
    gb = Ideal(fams("p", [1, 2, 3], 3)).groebner_basis()
    expected = {parse_polynomial(s, 3) for s in
                ["x1 + x2 + x3", "x2^2 + x2*x3 + x3^2", "x3^3"]}
    assert set(gb) == expected
    assert gb.complete


def test_textbook_lex_example():
    # twisted cubic: (y - x^2, z - x^3) in lex x > y > z
    gens = [parse_polynomial("x2 - x1^2", 3), parse_polynomial("x3 - x1^3", 3)]
    gb = Ideal(gens, 3, LEX).groebner_basis()
    assert set(gb) == _sympy_gb(gens, 3, "lex")


@pytest.mark.parametrize("order,name", [(GREVLEX, "grevlex"), (LEX, "lex")])
def test_random_ideals_match_sympy(order, name):
    rng = random.Random(7)
    for trial in range(12):
        n = rng.choice([2, 3])
        gens = [random_form(rng, n, rng.randint(1, 3), nterms=3) for _ in range(rng.randint(2, 3))]
        if trial % 3 == 0:  # include an inhomogeneous generator
            gens[0] = gens[0] + Polynomial.constant(rng.randint(1, 3), n)
        ours = set(Ideal(gens, n, order).groebner_basis())
        assert ours == _sympy_gb(gens, n, name), gens


def test_symmetric_ideals_match_sympy():
    for kind, degs, n in [("p", [2, 3], 3), ("h", [1, 4, 5], 3), ("h", [2, 3], 3), ("p", [2, 3], 4)]:
        gens = fams(kind, degs, n)
        assert set(Ideal(gens, n).groebner_basis()) == _sympy_gb(gens, n, "grevlex")


def test_generator_order_does_not_matter():
    rng = random.Random(3)
    gens = fams("h", [2, 3, 5], 3) + [random_form(rng, 3, 3)]
    ref = set(Ideal(gens, 3).groebner_basis())
    for _ in range(5):
        rng.shuffle(gens)
        assert set(Ideal(list(gens), 3).groebner_basis()) == ref


def test_buchberger_criterion_holds():
    gens = fams("p", [2, 3, 5], 4)
    gb = list(Ideal(gens, 4).groebner_basis())
    ideal = Ideal(gb, 4)
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            s = s_polynomial(gb[i], gb[j])
            # reduce the S-polynomial by the basis itself (division algorithm)
            assert ideal.normal_form(s).is_zero()


def test_membership_of_combinations():
    rng = random.Random(11)
    gens = fams("p", [1, 3], 3)
    ideal = Ideal(gens, 3)
    outside = Polynomial.variable(0, 3) ** 2  # nothing of degree 2 lies in (p1, p3) but x*p1
    assert outside not in ideal
    for _ in range(10):
        a = random_form(rng, 3, 3)
        b = random_form(rng, 3, 1)
        f = a * gens[0] + b * gens[1]
        assert is_member(f, ideal)
        assert not is_member(f + outside * Polynomial.variable(1, 3) ** 2, ideal)


def test_membership_of_power_sums():
    ideal = Ideal(fams("p", [1, 2], 3), 3)
    # residues: p_{3k} -> 3 e3^k, everything else -> 0
    assert fams("p", [4], 3)[0] in ideal
    assert fams("p", [5], 3)[0] in ideal
    assert fams("p", [3], 3)[0] not in ideal
    assert fams("p", [6], 3)[0] not in ideal


def test_normal_form_properties():
    rng = random.Random(5)
    ideal = Ideal(fams("h", [2, 3], 3), 3)
    for _ in range(10):
        f = random_form(rng, 3, rng.randint(2, 6), nterms=5)
        r = normal_form(f, ideal)
        assert normal_form(r, ideal) == r  # idempotent
        assert is_member(f - r, ideal)
        lms = Ideal(fams("h", [2, 3], 3), 3).leading_monomials()
        for m in r.terms:  # no term divisible by a leading monomial
            assert not any(all(a <= b for a, b in zip(l, m)) for l in lms)


def test_normal_form_of_inhomogeneous_input():
    ideal = Ideal([parse_polynomial("x1^2 - x2", 2), parse_polynomial("x2^2 - 1", 2)], 2)
    assert normal_form(parse_polynomial("x1^4", 2), ideal) == Polynomial.constant(1, 2)


def test_truncated_basis_agrees_below_cutoff():
    gens = fams("h", [2, 3, 4], 4)
    full = Ideal(gens, 4).groebner_basis()
    part = Ideal(gens, 4).groebner_basis(cutoff=6)
    assert part.valid_upto >= 6
    assert {g for g in full if g.degree <= 6} == {g for g in part if g.degree <= 6}


def test_cutoff_needs_homogeneous_input():
    ideal = Ideal([parse_polynomial("x1^2 - x2", 2)], 2)
    gb = ideal.groebner_basis(cutoff=1)
    assert gb.complete  # cutoff is ignored for inhomogeneous input


def test_unit_ideal():
    gb = Ideal([parse_polynomial("x1 - 1", 2), parse_polynomial("x1", 2)], 2).groebner_basis()
    assert list(gb) == [Polynomial.constant(1, 2)]


def test_hilbert_of_incomplete_basis_raises():
    from regseq.hilbert import hs_from_groebner

    ideal = Ideal(fams("p", [2, 3], 4), 4)
    ideal.run(cutoff=3)
    # hs_from_groebner completes the run itself; an explicit incomplete engine
    # must never be mistaken for the full basis
    assert hs_from_groebner(ideal).denominator_exponent == 2
    assert issubclass(CutoffExceeded, RuntimeError)


@given(st.integers(1, 4), st.lists(st.integers(-3, 3).filter(bool), min_size=2, max_size=2))
@settings(max_examples=25, deadline=None)
def test_scaling_generators_keeps_the_basis(seed, scales):
    rng = random.Random(seed)
    gens = [random_form(rng, 3, 2), random_form(rng, 3, 3)]
    ref = set(Ideal(gens, 3).groebner_basis())
    scaled = [g.scale(c) for g, c in zip(gens, scales)]
    assert set(Ideal(scaled, 3).groebner_basis()) == ref
