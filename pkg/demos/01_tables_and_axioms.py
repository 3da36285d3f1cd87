"""Addition tables and the five axioms.

A finite distance magma on elements 0 = e0 < e1 < ... < en is a table of
element indices: cell (i, j) says where ei + ej lands.  Validation checks
identity, symmetry, positivity, monotonicity, and (for monoids)
associativity.
"""

from distmon import capped_naturals, from_entries, max_monoid, sup_monoid, validate
from distmon.table import from_upper_triangle, loads

print("== the two extremes ==")
mx = max_monoid(4)
cap = capped_naturals(4)
print("max monoid row 2:   ", mx.entries[2])
print("capped-sum row 2:   ", cap.entries[2])
print("both are monoids:   ", mx.is_monoid, cap.is_monoid)

print()
print("== a table with two Archimedean blocks (values 1,2,5,6,7) ==")
example, is_monoid = sup_monoid([1, 2, 5, 6, 7])
for row in example.entries:
    print("   ", row)
print("associative:", is_monoid)

print()
print("== an axiom violation is data, not an exception ==")
broken = from_entries(2, [[0, 1, 2], [1, 0, 2], [2, 2, 2]])
report = validate(broken)
print("is_magma:", report.is_magma)
for v in report.violations:
    print("violation:", v.axiom, "at", v.witness)

print()
print("== the one non-associative magma on 3 nonzero elements ==")
almost = from_upper_triangle(3, (2, 2, 3, 3, 3, 3))
report = validate(almost)
print("is_magma:", report.is_magma, "| is_monoid:", report.is_monoid)
print("witness triple:", report.violations[0].witness)
# (e1+e1)+e2 = e2+e2 = e3, but e1+(e1+e2) = e1+e2 = e2

print()
print("== JSON round trip ==")
text = example.dumps()
print(text[:60], "...")
print("round trips:", loads(text) == example)
