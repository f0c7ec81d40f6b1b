import json
from itertools import combinations

import pytest

from regseq import scanner
from regseq.regular import is_regular_sequence
from regseq.scanner import (
    candidate_tuples,
    emit_report,
    eval_predicate,
    load_config,
    prime_families,
    scan,
)

from conftest import fams


def test_predicate_examples():
    assert eval_predicate("ckw3p", (1, 2, 3))
    assert not eval_predicate("ckw3p", (1, 2, 4))
    assert not eval_predicate("ckw4p", (1, 2, 5, 6))
    assert eval_predicate("ckw3h", (1, 2, 6))
    assert eval_predicate("ckw4p", (1, 2, 3, 4))


def test_predicate_shape_errors():
    with pytest.raises(ValueError):
        eval_predicate("ckw3p", (1, 2))
    with pytest.raises(ValueError):
        eval_predicate("ckw3p", (3, 2, 1))
    with pytest.raises(ValueError):
        eval_predicate("ckw3p", (2, 4, 6))  # gcd 2
    with pytest.raises(ValueError):
        eval_predicate("nope", (1, 2, 3))


def test_ckw3h_third_condition_needs_only_small_moduli():
    def literal(t, bound):
        a, b, c = t
        return (a * b * c % 6 == 0 and __import__("math").gcd(a + 1, b + 1, c + 1) == 1
                and all(any((d + 2) % m not in (0, 1) for d in t) for m in range(3, bound)))

    for t in combinations(range(1, 13), 3):
        assert eval_predicate("ckw3h", t) == literal(t, 3 * t[2] + 20)


def test_conj4p_item5_flag():
    # (1, 2, 5): a odd and b even, so items 1-4 hold; item 5 excludes (a, 2a, 5a)
    assert not eval_predicate("conj4p-triples", (1, 2, 5))
    assert eval_predicate("conj4p-triples", (1, 2, 5), item5="ignore")
    with pytest.raises(ValueError):
        eval_predicate("conj4p-triples", (1, 2, 5), item5="maybe")


def test_conj4p_items():
    assert eval_predicate("conj4p-triples", (1, 3, 4))       # item 2, n even
    assert not eval_predicate("conj4p-triples", (1, 3, 5))   # item 2, n odd
    assert eval_predicate("conj4p-triples", (2, 6, 10))      # item 3, lambda = 4, n = 4*2+2
    assert not eval_predicate("conj4p-triples", (2, 6, 8))
    assert not eval_predicate("conj4p-triples", (4, 12, 13))  # item 4, b = 3a
    assert not eval_predicate("conj4p-triples", (4, 5, 12))   # item 4, n = 3a
    assert eval_predicate("conj4p-triples", (4, 5, 8))


def test_prime_families():
    assert prime_families((5, 6)) == [1]
    assert prime_families((5, 10)) == [1]
    assert prime_families((5, 7)) == []
    assert prime_families((2, 3)) == [2]
    assert prime_families((2, 5)) == []      # 2 + 3
    assert prime_families((2, 6)) == []      # 2 + 4
    assert prime_families((3, 10)) == [3]
    assert prime_families((3, 12)) == []     # m = 6
    assert prime_families((4, 7)) == []      # 4 + 3
    assert prime_families((4, 12)) == []     # 4 + 8
    assert prime_families((4, 9)) == [4]


def test_candidate_ranges():
    assert len(candidate_tuples("ckw3p", 12)) == 196
    assert len(candidate_tuples("ckw3h", 12)) == 220
    assert candidate_tuples("ckw3p", 3) == [(1, 2, 3)]
    assert all(t[0] in (2, 3, 4, 5, 7) for t in candidate_tuples("conj4-prime-families", 10))


def test_summary_matches_rows():
    r = scan("ckw3h", 8)
    s = r.summary
    assert s["total"] == len(r.rows)
    assert s["agree"] + s["mismatch"] + s["inconclusive"] + s["no-claim"] == s["total"]
    assert s["mismatch"] == len(r.mismatches)


def test_determinism_and_parallel_merge():
    a = emit_report(scan("ckw3h", 9), "json")
    b = emit_report(scan("ckw3h", 9), "json")
    c = emit_report(scan("ckw3h", 9, jobs=2), "json")
    assert a == b == c
    assert emit_report(scan("ckw3p", 7), "tsv") == emit_report(scan("ckw3p", 7, jobs=2), "tsv")


def test_json_round_trip():
    r = scan("ckw3p", 3)
    data = json.loads(emit_report(r, "json"))
    assert data == json.loads(json.dumps(r.to_dict()))
    assert data["rows"][0]["tuple"] == [1, 2, 3]


def test_empty_range_gives_header_only_tsv():
    r = scan("ckw3p", 2)
    assert r.rows == []
    assert emit_report(r, "tsv") == b"tuple\tpredicate\tprocedure\tstatus\tverified_slice\tmethod\twitness\n"
    with pytest.raises(ValueError):
        emit_report(r, "xml")


def test_pruned_tuples_are_never_regular():
    r = scan("ckw4p", 7)
    pruned = [row for row in r.rows if row["method"] == "subset-pruning"]
    assert pruned
    for row in pruned:
        assert row["procedure"] is False
        assert not is_regular_sequence(fams("p", row["pruned_by"], 4), 4).regular
        assert not is_regular_sequence(fams("p", row["tuple"], 4)).regular
    unpruned = scan("ckw4p", 7, prune=False)
    assert [row["procedure"] for row in r.rows] == [row["procedure"] for row in unpruned.rows]


def test_mismatch_rows_carry_witnesses(monkeypatch):
    monkeypatch.setattr(scanner, "_ckw3h", lambda t: True)
    r = scan("ckw3h", 7)
    bad = [row for row in r.rows if row["status"] == "mismatch"]
    assert bad
    for row in bad:
        w = row["witness"]
        assert w and w["hilbert_function"] != w["complete_intersection"]
    assert r.exit_code() == 1  # e.g. (1, 2, 4) lies in a verified slice


def test_engine_errors_become_inconclusive_rows(monkeypatch):
    real = scanner.is_regular_sequence

    def flaky(gens, n=None, **kw):
        if [g.degree for g in gens] == [1, 2, 5]:
            raise RuntimeError("boom")
        return real(gens, n, **kw)

    monkeypatch.setattr(scanner, "is_regular_sequence", flaky)
    r = scan("ckw3p", 5, prune=False)
    row = next(row for row in r.rows if row["tuple"] == [1, 2, 5])
    assert row["status"] == "inconclusive" and "boom" in row["error"]
    assert r.summary["total"] == len(candidate_tuples("ckw3p", 5))
    assert r.exit_code() == 2


def test_prime_family_scan_small():
    r = scan("conj4-prime-families", 6)
    statuses = {tuple(row["tuple"]): row["status"] for row in r.rows}
    assert statuses[(2, 3)] == "agree"
    assert statuses[(2, 5)] == "no-claim"
    assert r.summary["mismatch"] == 0


def test_vars_must_match_predicate():
    with pytest.raises(ValueError):
        scan("ckw3p", 5, vars=4)


def test_config_and_environment(tmp_path, monkeypatch):
    cfg = tmp_path / "scan.cfg"
    cfg.write_text("# bounds\nmax = 9\nitem5 = ignore\n\n")
    assert load_config(cfg) == {"max": 9, "item5": "ignore"}
    cfg.write_text("max 9\n")
    with pytest.raises(ValueError):
        load_config(cfg)
    monkeypatch.setenv("REGSEQ_JOBS", "3")
    assert scanner.default_jobs() == 3
    monkeypatch.setenv("REGSEQ_JOBS", "0")
    with pytest.raises(ValueError):
        scanner.default_jobs()
