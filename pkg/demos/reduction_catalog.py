"""Closed-form residues of p_N and h_N modulo small symmetric ideals.

Each rule is checked twice: the printed closed form and the residue
recomputed in the ring of symmetric functions are both tested for ideal
membership in Q[x1..xn].  Differences between the two are classified.
"""

from regseq.reductions import reduce_to_e, verify_catalog
from regseq.symfun import format_elementary

residue = reduce_to_e(("p", 9), [("p", 1), ("p", 2)], 3)
print("p9 mod (p1, p2) in 3 variables:", format_elementary(residue))
print()

for verdict in verify_catalog(k_max=4):
    info = verdict.info
    issues = ", ".join(f"{d['kind']} in {d['branch']}" for d in info["discrepancies"]) or "none"
    print(f"{info['rule']:<14} printed form {'holds' if info['stated_pass'] else 'FAILS'}; "
          f"recomputed {'holds' if info['oracle_pass'] else 'FAILS'}; differences: {issues}")
    if info["note"]:
        print(f"{'':14} note: {info['note']}")

# Look closely at one rule where the printed coefficient is off.
print()
for row in verify_catalog(k_max=3)[1].info["rows"]:
    print(f"  {row['target']:>4}: printed {row['stated']:<10} recomputed {row['oracle']}")
