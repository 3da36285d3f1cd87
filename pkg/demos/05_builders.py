"""Constructing monoid families instead of searching for them.

Four constructions: sup-addition over any increasing carrier, the
structured complexity-2 builder (which realizes the counting formula as a
bijection), the C(n-2,k) lower-bound family, and the counterexample family
whose complexity grows while its progressions stay at length 2.
"""

from fractions import Fraction

from distmon import (
    Complexity2Spec,
    ap_profile,
    arch_complexity,
    build_complexity2,
    counterexample_family,
    counterexample_values,
    dm_n_2,
    enumerate_complexity2,
    lower_bound_family,
    sup_monoid,
)

print("== sup-addition: associativity is checked, never assumed ==")
good, flag = sup_monoid([1, 2, 5, 6, 7])
print("carrier 1,2,5,6,7:     monoid =", flag, " arch =", arch_complexity(good))
bad, flag = sup_monoid([2, Fraction(7, 2), 6])
print("carrier 2,7/2,6:       monoid =", flag, " (a magma only)")

print()
print("== one complexity-2 monoid from a spec ==")
spec = Complexity2Spec(composition=(1, 3), chains=(((3,),),))
t = build_complexity2(spec)
print("composition (1,3), cross sums ceil to the class max:")
for row in t.entries:
    print("   ", row)

print()
print("== all of them: the builder hits the census stratum exactly ==")
for n in (3, 4, 5):
    tables = enumerate_complexity2(n)
    print(f"n={n}: built {len(tables)} tables; formula says {dm_n_2(n)}")

print()
print("== lower-bound family: C(n-2,k) distinct monoids of complexity n-k ==")
members = lower_bound_family(6, 2)
print(f"(n=6, k=2): {len(members)} members, archs",
      sorted({arch_complexity(m) for m in members}))

print()
print("== high complexity without long progressions ==")
for m in range(2, 6):
    t = counterexample_family(m)
    print(f"m={m}: {t.n:2d} nonzero elements, arch {arch_complexity(t)}, "
          f"longest progression {ap_profile(t).longest}")
print("the m=4 carrier:", counterexample_values(4))
