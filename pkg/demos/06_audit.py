"""The audit: every formula cross-checked against brute force in one run.

Each record pairs an independently computed expectation with the census
value.  Pass --deep on the CLI (distmon audit --n-max 6 --deep --jobs 2)
to include the n=9 check of the complexity n-2 formula.
"""

from distmon import run_audit

report = run_audit(n_max=5)
print(f"{len(report.records)} checks, overall pass: {report.overall}")
print()

width = max(len(r.name) for r in report.records)
for r in report.records:
    status = "ok " if r.passed else "FAIL"
    params = ", ".join(f"{k}={v}" for k, v in r.parameters.items())
    print(f"  [{status}] {r.name:<{width}}  {params:<22} "
          f"expected {r.expected}, got {r.actual}")
