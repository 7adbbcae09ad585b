"""Checking that a term behaves like a diagram would.

Run: python demos/04_consistency.py
"""
import json
from pathlib import Path

from mimc import check_semantic, check_strong, check_weak, parse_process, proposition1_harness

here = Path(__file__).parent
terms = {
    "one-sided bind": parse_process((here / "p2.mimc").read_text()),
    "reciprocal bind": parse_process((here / "p3.mimc").read_text()),
    "two A molecules that disagree": parse_process("{bind(B){bind(C){}}}.A | {}.A"),
}
for label, p in terms.items():
    print(f"== {label}")
    for check in (check_weak, check_strong, check_semantic):
        print(f"  {check.__name__:15} {json.dumps(check(p).to_json())}")

# Random diagram-derived terms: weakly consistent by construction, and no
# exploration up to depth 4 finds a disagreement.
report = proposition1_harness(seed=1, trials=25, depth=4)
print()
print(f"random tables: {report.checked} checked, ok={report.ok}, {report.up_to_depth} hit the bound")
