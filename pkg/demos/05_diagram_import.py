"""From a diagram description to a term, and on to its behaviour.

Run: python demos/05_diagram_import.py
"""
from pathlib import Path

from mimc import DiagramSpec, check_strong, compile_table, enabled_transitions, instantiate, print_action
from mimc import print_caps, print_name, print_process

here = Path(__file__).parent
for name in ("abc.mimd.json", "enzyme.mimd.json", "e2f1.mimd.json"):
    spec = DiagramSpec.load(here / name)
    table = compile_table(spec)
    print(f"== {name}")
    for n, c in sorted(table.items(), key=lambda kv: print_name(kv[0])):
        print(f"  {print_name(n):28} {print_caps(c)}")
    term = instantiate(table, spec.counts())
    print("  term  :", print_process(term))
    print("  strong:", type(check_strong(term)).__name__)
    print("  moves :", ", ".join(print_action(t.action) for t in enabled_transitions(term)))
