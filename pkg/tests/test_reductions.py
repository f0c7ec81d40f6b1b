import pytest

from regseq.reductions import (
    catalog,
    get_rule,
    oracle_residue,
    reduce_to_e,
    verify_rule,
)
from regseq.regular import is_regular_sequence
from regseq.symfun import format_elementary

from conftest import fams


def _r(target, modulus, n):
    kind = target[0]
    return format_elementary(reduce_to_e((kind, int(target[1:])), [(m[0], int(m[1:])) for m in modulus], n))


def test_catalog_shape():
    rules = catalog()
    assert len(rules) == 11
    assert len({r.id for r in rules}) == 11
    for r in rules:
        assert sorted(b.remainder for b in r.branches) == list(range(r.period))
        assert r.nvars in (3, 4)


def test_known_residues():
    assert _r("p6", ["p1", "p2"], 3) == "3*e3^2"
    assert _r("p9", ["p1", "p2"], 3) == "3*e3^3"
    assert _r("p3", ["p1", "p2"], 3) == "3*e3"
    assert _r("p4", ["p1", "p2"], 3) == "0"
    assert _r("p5", ["p1", "p3"], 3) == "0"
    assert _r("p4", ["p1", "p2", "p3"], 4) == "-4*e4"


def test_sign_of_h3_modulo_h1_h2():
    # h3 = e1 h2 - e2 h1 + e3 h0, so h3 = +e3 once h1 = h2 = 0
    assert _r("h3", ["h1", "h2"], 3) == "e3"


def test_h5_modulo_h1_h4():
    assert _r("h5", ["h1", "h4"], 3) == "-2*e2*e3"


def test_reduce_rejects_degree_zero():
    with pytest.raises(ValueError):
        reduce_to_e(("p", 0), [("p", 1)], 3)


def test_stated_rule_passes_when_correct():
    v = verify_rule(get_rule("p-mod-p1p2"), k_max=5)
    assert v.ok and v.info["stated_pass"] and not v.info["discrepancies"]


def test_zero_branch_of_p1p3_rule():
    v = verify_rule(get_rule("p-mod-p1p3"), k_max=6)
    zero_rows = [r for r in v.info["rows"] if r["branch"] == "0"]
    assert len(zero_rows) == 6
    assert all(r["stated_pass"] and r["oracle_pass"] for r in zero_rows)


def test_p124_rule_coefficient():
    v = verify_rule(get_rule("p-mod-p1p2p4"), k_max=4)
    assert v.ok and not v.info["stated_pass"]
    assert v.info["discrepancies"] == [{"branch": "4*e3^k", "kind": "coefficient"}]
    assert {r["oracle"] for r in v.info["rows"] if r["k"] == 1 and r["branch"] != "0"} == {"3*e3"}


def test_verify_rule_rejects_bad_kmax():
    with pytest.raises(ValueError):
        verify_rule(get_rule("p-mod-p1p2"), 0)


@pytest.mark.parametrize("rule", catalog(), ids=lambda r: r.id)
def test_oracle_residue_is_a_multiple_of_the_stated_monomial(rule):
    for branch in rule.branches:
        for k in range(1, 5):
            residue, kind = oracle_residue(rule, k, branch.remainder)
            assert kind == "multiple"
            stated = branch.residue(k, rule.nvars)
            if not stated.is_zero():
                assert set(residue.terms) == set(stated.terms)


def _expected_regular(rule, N):
    """Residue-zero degrees can never be regular; the one nonzero-but-singular
    family is (h1, h4, h_{3k+2})."""
    residue, _ = oracle_residue(rule, *divmod(N, rule.period))
    if residue.is_zero():
        return False
    return not (rule.id == "h-mod-h1h4" and N % 3 == 2)


@pytest.mark.parametrize("rule", catalog(), ids=lambda r: r.id)
def test_residues_are_consistent_with_regularity(rule):
    base_degrees = [d for _, d in rule.modulus]
    for N in range(max(base_degrees) + 1, 19):
        gens = fams(rule.family, base_degrees + [N], rule.nvars)
        assert is_regular_sequence(gens).regular == _expected_regular(rule, N), N
