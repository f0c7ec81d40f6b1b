"""Compare conjectured regularity criteria with the decision procedure.

The scanner enumerates degree tuples, evaluates the conjectured predicate
and the exact verdict, and reports agreement row by row.  Mismatches
outside the range where the criterion is proven are expected evidence,
not test failures.
"""

from regseq import scan

for pid, max_entry in [("ckw3p", 9), ("ckw3h", 9), ("conj4p-triples", 10)]:
    report = scan(pid, max_entry)
    s = report.summary
    print(f"{pid:<15} {s['total']:4d} tuples  {s['agree']:4d} agree  {s['mismatch']:2d} mismatch "
          f"({s['verified_mismatches']} inside proven slices)")
    for row in report.rows:
        if row["status"] == "mismatch":
            print(f"    {row['tuple']}: conjecture says {row['predicate']}, "
                  f"procedure says {row['procedure']}")
