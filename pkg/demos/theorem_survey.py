"""Sweep every poset on up to five elements and tally the structure checks.

Run:  python demos/theorem_survey.py
"""

from collections import Counter

from orthoposet import analyze, generate_posets, product_closure_check, fixture

# Exhaustive corpora, up to isomorphism: 1, 2, 5, 16, 63 classes.
tally = Counter()
verdicts = Counter()
for n in range(1, 6):
    for p in generate_posets(n):
        report = analyze(p)
        tally["posets"] += 1
        for flag in ("bounded", "lattice", "meet_semilattice", "pseudocomplemented"):
            if report.flags[flag]:
                tally[flag] += 1
        for theorem, verdict in report.theorems.items():
            verdicts[(theorem, verdict)] += 1

print(f"surveyed {tally['posets']} posets on 1..5 elements (up to isomorphism)")
for flag in ("bounded", "lattice", "meet_semilattice", "pseudocomplemented"):
    print(f"  {flag}: {tally[flag]}")

print("\ntheorem verdicts (pass / hypothesis-not-met):")
for theorem in ("t1", "t2", "glivenko", "forbidden"):
    passed = verdicts[(theorem, "pass")]
    skipped = verdicts[(theorem, "hypothesis-not-met")]
    failed = verdicts[(theorem, "fail")]
    print(f"  {theorem}: {passed} / {skipped}" + (f" / {failed} FAILED" if failed else ""))

# The closed sets of a product are exactly the products of closed sets.
chk = product_closure_check(fixture("M(2)").build(), fixture("B(1)").build())
print(f"\nproduct law on M(2) x B(1): {chk.closed_product_ok}, "
      f"closure lattice matches the factor product: {chk.iso is not None}")
