from itertools import combinations

import pytest

from regseq.groebner import Ideal
from regseq.polycore import Polynomial, parse_polynomial
from regseq.primality import (
    determinant,
    jacobian_minors,
    probe_points,
    serre_pipeline,
    zero_locus_probe,
)
from regseq.regular import is_regular_sequence

from conftest import fams


def _same_up_to_constants(a, b):
    norm = lambda ps: {p.monic() for p in ps}
    return norm(a) == norm(b)


def _vandermonde_minors(a, m, n):
    """x_{i1}^{a-1}...x_{im}^{a-1} * prod (x_j - x_i) over chosen columns."""
    x = [Polynomial.variable(i, n) for i in range(n)]
    out = []
    for cols in combinations(range(n), m):
        f = Polynomial.constant(1, n)
        for c in cols:
            f = f * x[c] ** (a - 1)
        for i, j in combinations(cols, 2):
            f = f * (x[j] - x[i])
        out.append(f)
    return out


def test_determinant():
    a, b = parse_polynomial("x1", 2), parse_polynomial("x2", 2)
    assert determinant([[a, b], [b, a]]) == a * a - b * b


@pytest.mark.parametrize("a,m,n", [(1, 2, 4), (2, 2, 4), (3, 2, 4), (1, 3, 5), (2, 3, 5)])
def test_consecutive_power_sums_give_vandermonde_minors(a, m, n):
    minors = jacobian_minors(fams("p", range(a, a + m), n), n).generators
    assert _same_up_to_constants(minors, _vandermonde_minors(a, m, n))


def test_p1_p4_minors_are_differences_of_cubes():
    minors = jacobian_minors(fams("p", [1, 4], 4), 4).generators
    expect = [parse_polynomial(f"x{i}^3 - x{j}^3", 4) for i, j in combinations(range(1, 5), 2)]
    assert _same_up_to_constants(minors, expect)


def test_minor_input_errors():
    with pytest.raises(ValueError):
        jacobian_minors(fams("p", [1, 2, 3], 3), 3)


@pytest.mark.parametrize("degrees,n", [((2, 3), 4), ((1, 4), 4), ((1, 2, 3), 5), ((1, 2), 4)])
def test_certified_primes(degrees, n):
    r = serre_pipeline(fams("p", degrees, n), n)
    assert r.verdict == "prime-certified"
    assert r.regular_sequence and r.hypotheses_met
    assert r.artinian_degree <= r.cutoff


def test_artinian_degree_is_minimal():
    from regseq.hilbert import hf_at_degree

    gens = fams("p", [2, 3], 4)
    r = serre_pipeline(gens, 4)
    full = gens + list(jacobian_minors(gens, 4).generators)
    assert hf_at_degree(full, 4, r.artinian_degree) == 0
    assert hf_at_degree(full, 4, r.artinian_degree - 1) > 0
    # once zero, zero on a window above
    assert all(hf_at_degree(full, 4, d) == 0 for d in range(r.artinian_degree, r.artinian_degree + 3))


def test_inconclusive_cases():
    # singular locus is positive dimensional
    r = serre_pipeline(fams("p", [4, 7], 4), 4)
    assert r.verdict == "inconclusive" and r.artinian_degree is None
    # a tight cutoff is never turned into a negative answer
    r = serre_pipeline(fams("p", [2, 3], 4), 4, cutoff=3)
    assert r.verdict == "inconclusive"
    # outside the codimension hypothesis the certificate does not apply
    r = serre_pipeline(fams("p", [1, 2], 3), 3)
    assert not r.hypotheses_met and r.verdict == "inconclusive"


def test_default_cutoff():
    r = serre_pipeline(fams("p", [2, 3], 4), 4)
    assert r.cutoff == 2 * 5 + 4


def test_certified_pairs_make_regular_triples():
    """A prime (f, g) of height 2: any h outside it is a nonzerodivisor."""
    for a in (1, 2, 3):
        pair = fams("p", [a, a + 1], 4)
        assert serre_pipeline(pair, 4).verdict == "prime-certified"
        ideal = Ideal(pair, 4)
        for c in range(a + 2, a + 9):
            h = fams("p", [c], 4)[0]
            if h not in ideal:
                assert is_regular_sequence(pair + [h], 4).regular, (a, c)


def test_zero_locus_probe_examples():
    assert zero_locus_probe(fams("p", [1, 4], 4), 4)
    assert zero_locus_probe(fams("p", [1, 2], 4), 4, roots_order=1)
    assert zero_locus_probe(fams("p", [2, 3], 4), 4, candidate_support=1)


def test_probe_finds_genuine_zeros():
    # the cone x1^2 - x2^2 is singular along the x3-axis: point (0, 0, 1)
    pts = probe_points([parse_polynomial("x1^2 - x2^2", 3)], 3, roots_order=2)
    assert pts == [(None, None, 0)]
    # a smooth hyperplane has no singular points at all
    assert zero_locus_probe([parse_polynomial("x1 - x2", 3)], 3, roots_order=2)
