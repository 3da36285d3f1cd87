"""Exact counting formulas, all big-integer, all cross-checkable.

The centerpiece: the number of complexity-2 monoids on n nonzero elements
is a sum over compositions that collapses to Bell(n) - 1.
"""

from distmon import (
    bell,
    count_A_chains,
    dm_n_2,
    dm_near_top,
    enumerate_A,
    lower_bound,
    stirling2,
)

print("== composition sum vs Bell numbers ==")
print(" n   dm_n_2(n)   bell(n)-1")
for n in range(2, 11):
    print(f"{n:2d}  {dm_n_2(n):9d}   {bell(n) - 1:9d}")

print()
print("== Bell via Stirling numbers of the second kind ==")
n = 7
row = [stirling2(n, k) for k in range(n + 1)]
print(f"S({n},k) row:", row)
print("sum:", sum(row), "== bell:", bell(n))

print()
print("== counts near the top of the complexity range ==")
print("complexity n   (any n):  ", dm_near_top(5, 0))
print("complexity n-1 (n=6):    ", dm_near_top(6, 1))
print("complexity n-2 (n=9):    ", dm_near_top(9, 2))
print("guaranteed minimum at complexity n-k, (n=10, k=2):", lower_bound(10, 2))

print()
print("== ceiling maps: the atoms of complexity-2 structure ==")
for m in enumerate_A(3):
    print("  fixed points", sorted(m.fixed_points), "-> targets", m.targets)
print("count for n=8:", len(enumerate_A(8)), "== 2^7")
print("ordered 3-chains of maps on [4]:", count_A_chains(4, 3), "== 4^3")

print()
print("== growth: bell(n)-1 beats any b^n eventually ==")
for b, n in [(2, 8), (3, 12), (4, 16)]:
    print(f"  bell({n})-1 = {bell(n)-1} > {b}^{n} = {b**n}")
