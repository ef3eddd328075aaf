"""
Verification suites and canonical reports
=========================================

Seven named suites sweep the (type, gamma) case matrix.  Results are
three-valued: hypothesis-gated marks claims whose stated hypothesis fails
for that gamma, with a concrete bracket witness.  Reports serialize to
canonical JSON, byte-identical across reruns.
"""
import json

from liework.cli import build_report, canonical_json
from liework.suites import CaseSpec, default_case_matrix, run_suite, run_suites

# The default matrix: every subset of simple roots for every supported
# type, 38 cases.
matrix = default_case_matrix()
print("default matrix:", len(matrix), "cases; first four:",
      [c.case_label() for c in matrix[:4]])

# One suite, one case.
res = run_suite("richardson-torsor", [CaseSpec.from_string("G2:2")])[0]
print("\nrichardson-torsor @ G2:2 ->", res.status)
for c in res.checks:
    print(f"  {c.name:<28} expected {c.expected:<16} actual {c.actual}")

# Hypothesis gating in action: for gamma = {1} in A2 the Levi brackets
# push u outside [u,u], so the dependent claims are reported as gated,
# never silently skipped and never failed.
res = run_suite("bc-hypotheses", [CaseSpec.from_string("A2:1")])[0]
print("\nbc-hypotheses @ A2:1 ->", res.status)
print("  witness:", res.checks[0].witness)

# A small end-to-end report.  Numbers travel as decimal strings and
# rationals as num/den, so nothing in the interchange format floats.
cases = [CaseSpec.from_string(s) for s in ("A1:-", "A2:1")]
results = run_suites(["algebra", "parabolic-identities", "bc-hypotheses"],
                     cases)
doc = build_report(results, seed=0xC0FFEE, max_word_len=8)
print("\nsummary:", doc["summary"])

# Canonical serialization round-trips byte-identically.
raw = canonical_json(doc)
print("round-trip identical:", canonical_json(json.loads(raw)) == raw)
print("report bytes:", len(raw))
