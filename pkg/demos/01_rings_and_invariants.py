#!/usr/bin/env python3
"""Rings with cube-zero radical: building them and reading invariants.

Every ring here is k + V1 + V2 over a prime field, presented by quadric
relations on the degree-1 variables.  The script walks the catalog and a
couple of hand-built rings, printing the invariants that drive everything
else: embedding dimension e, socle dimension r, length, and whether the
socle equals m^2 (the dividing line for all the resolution behavior).
"""

from radcube import build_from_quadrics
from radcube.catalog import CATALOG

print("=== catalog ===")
for name, entry in sorted(CATALOG.items()):
    ring = entry.ring()
    inv = ring.invariants()
    print(f"\n{name}: {entry.description}")
    print(f"  hilbert {inv.hilbert}, r = {inv.r}, length = {inv.length}")
    print(f"  Soc = m^2: {inv.soc_eq_msq}, Gorenstein: {inv.gorenstein}")
    print(f"  socle basis: {', '.join(str(el) for el in inv.socle_basis)}")
    if entry.note:
        print(f"  note: {entry.note}")

print("\n=== multiplication in the flagship ring ===")
R4 = CATALOG["R4"].ring()
x, y, z = (R4.gen(n) for n in "xyz")
print(f"x*z = {x*z},  y*z = {y*z},  x*y = {x*y}")
print(f"(x+z)*(x-z) = {(x+z)*(x-z)}   <- an exact zero-divisor pair")

print("\n=== a ring whose socle is bigger than m^2 ===")
RS = build_from_quadrics(5, ["x", "y"], ["x*y", "y^2"])
inv = RS.invariants()
print(f"F5[x,y]/(x*y, y^2) truncated: r = {inv.r} > s = {inv.s}")
print("y is annihilated by everything in m but is not a product:")
print(f"  x*y = {RS.gen('x') * RS.gen('y')}, y*y = {RS.gen('y') * RS.gen('y')}")
