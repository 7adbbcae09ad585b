"""An enzyme that comes back from the reaction it catalyses.

E binds A; the E:A complex converts into C plus a fresh E whose capability
is the recursive one we started with.  The explored state space is finite.

Run: python demos/03_enzyme.py
"""
from pathlib import Path

from mimc import explore, parse_process, print_action, print_process

term = parse_process((Path(__file__).parent / "enzyme.mimc").read_text())
lts = explore(term, max_depth=10, max_states=100)

for i, s in enumerate(lts.states):
    print(f"s{i}: {print_process(s)}")
for src, action, dst in lts.edges:
    print(f"s{src} --{print_action(action)}--> s{dst}")
print("explored completely:", not lts.truncated)

# Adding substrate grows the space but it stays finite.
bigger = explore(term | parse_process("{}.A | {}.A"), 20, 1000)
print("with three A:", len(bigger.states), "states,", len(bigger.edges), "edges")
