"""Stepping the E2F1/DP1/pRb transcription model by hand.

E2F1 and DP1 dimerise; the dimer binds the E2 promoter; the bound promoter
licenses transcription of DNA unless pRb has joined the complex.

Run: python demos/02_derivation.py
"""
from pathlib import Path

from mimc import Production, elem, enabled_transitions, parse_process, print_action, strip_process

here = Path(__file__).parent
state = parse_process((here / "e2f1.mimc").read_text())

# Always take the first listed transition that is not a dissociation, and
# watch the mixture assemble.
for step in range(4):
    moves = enabled_transitions(state)
    print(f"step {step}: {len(moves)} enabled")
    for t in moves:
        print("   ", print_action(t.action))
    forward = [t for t in moves if not print_action(t.action).startswith("ncu")]
    if not forward:
        break
    pick = next((t for t in forward if isinstance(t.action, Production)), forward[0])
    print("  take", print_action(pick.action))
    state = pick.target

print()
print("mRNA present:", elem("mRNA") in strip_process(state))
