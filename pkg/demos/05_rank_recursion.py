#!/usr/bin/env python3
"""The rank recursion a_i = e*a_{i+1} - r*a_{i+2} over positive integers.

Ranks of the modules in a constant-rank acyclic complex satisfy this
recursion going down the degrees.  The classifier decides, for e >= 1 and
r >= 2, whether any infinite positive-integer solution exists: the ratio
q = a_i/a_{i+1} must be constant and solve q^2 - e*q + r = 0 with q an
integer divisor of r; q > 1 would force an infinite strictly decreasing
chain, so only q = 1 survives, which means e = r + 1 and the sequence is
constant.  A bounded forward search cross-checks the classification.
"""

from radcube import classify, search_sequences, verify_prefix

print("=== classification over a small grid ===")
for r in range(2, 7):
    row = []
    for e in range(1, 9):
        v = classify(e, r)
        row.append("const" if v.constant_only else "  -  ")
    print(f"r={r}: " + " ".join(row))
print("(the 'const' diagonal is exactly e = r + 1)")

print("\n=== certificates ===")
for e, r in [(3, 2), (4, 2), (3, 3)]:
    v = classify(e, r)
    print(f"(e={e}, r={r}) -> {v.verdict}")
    print(f"   {v.certificate}")

print("\n=== the search oracle agrees ===")
found = search_sequences(3, 2, 12, 40)
print(f"(e=3, r=2): {len(found)} bounded prefixes of length 12, all constant:")
print(f"   first three: {found[:3]}")
assert all(len(set(seq)) == 1 for seq in found)
print(f"(e=4, r=2): {len(search_sequences(4, 2, 12, 40))} prefixes (none)")

print("\n=== residual reports ===")
rep = verify_prefix(3, 2, (2, 2, 2, 2))
print(f"prefix (2,2,2,2): residuals {rep.residuals}, valid = {rep.valid}")
rep = verify_prefix(3, 2, (2, 2, 3))
print(f"prefix (2,2,3):   residuals {rep.residuals}, valid = {rep.valid}")

print("\n=== the telescoping identity on found prefixes ===")
for seq in search_sequences(4, 3, 10, 25)[:3]:
    checks = [seq[i] * seq[i + 2] == seq[i + 1] ** 2 for i in range(len(seq) - 2)]
    print(f"{seq}: a_i*a_(i+2) = a_(i+1)^2 at every index: {all(checks)}")
