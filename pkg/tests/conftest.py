import sys
import random

import pytest
from hypothesis import strategies as st

from regseq.polycore import Polynomial
from regseq.symfun import SymFamily, generate


def fam(kind, degree, n):
    return generate(SymFamily(kind, degree, n))


def fams(kind, degrees, n):
    return [fam(kind, d, n) for d in degrees]


def random_form(rng, n, degree, nterms=4, coeffs=(-3, 3)):
    """Random homogeneous polynomial (never zero)."""
    from regseq.polycore import monomials_of_degree

    monos = list(monomials_of_degree(degree, n))
    while True:
        terms = {}
        for m in rng.sample(monos, min(nterms, len(monos))):
            terms[m] = rng.randint(*coeffs)
        f = Polynomial(terms, n)
        if not f.is_zero():
            return f


def polynomials(n=3, max_degree=3, max_terms=5, coeff=5):
    exps = st.tuples(*[st.integers(0, max_degree)] * n)
    coeffs = st.one_of(
        st.integers(-coeff, coeff),
        st.fractions(min_value=-coeff, max_value=coeff, max_denominator=4),
    )
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: Polynomial(d, n))


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
