"""Archimedean complexity, class decomposition, and progressions.

Complexity is the least m such that every nondecreasing chain of m+1
elements absorbs its smallest member.  Classes are the maximal intervals
whose elements dominate each other by repeated addition; each ends at an
idempotent.
"""

from distmon import (
    analysis_json,
    ap_profile,
    arch_complexity,
    arch_complexity_naive,
    capped_naturals,
    class_submonoid,
    decompose,
    idempotents,
    max_monoid,
    sup_monoid,
)

print("== extremes ==")
print("max monoid n=6:      arch =", arch_complexity(max_monoid(6)))
print("capped naturals n=6: arch =", arch_complexity(capped_naturals(6)))

print()
print("== the classic two-block example ==")
example, _ = sup_monoid([1, 2, 5, 6, 7])
print("fast arch: ", arch_complexity(example))
print("oracle arch:", arch_complexity_naive(example))
print("idempotents:", sorted(idempotents(example)))
dec = decompose(example)
print("class sizes:", dec.sizes, "boundaries:", dec.boundaries)

print()
print("whole-monoid complexity can exceed every class's complexity:")
for c in (1, 2):
    sub = class_submonoid(example, c)
    print(f"  class {c}: size {sub.n}, arch {arch_complexity(sub)}")
print("  whole:   arch", arch_complexity(example))

print()
print("== arithmetic progressions e, 2e, 3e, ... ==")
prof = ap_profile(example)
print("distinct multiples per element:", prof.per_element)
print("longest progression:", prof.longest)
print("(complexity 3, yet no element climbs more than twice)")

print()
print("== everything at once ==")
print(analysis_json(example))
