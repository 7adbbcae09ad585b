"""Writing terms, and what the canonical printer does with them.

Run: python demos/01_terms.py
"""
from mimc import bisimilar, parse_caps, parse_process, print_caps, print_process, process_equal, unfold

# Molecules are capabilities dotted onto a name; `|` puts them side by side.
p = parse_process("{}.B | {bind(B){bind(C){}}}.A | 0")
print("parsed   :", print_process(p))

# Sums are sets, compounds are unordered pairs, and bound variables get
# positional names, so many spellings share one printout.
spellings = [
    "{mod('p){} + bind(A){}}.({}.Y : {}.X)",
    "{bind(A){} + mod('p){} + bind(A){}}.({}.X : {}.Y)",
]
for s in spellings:
    print("canonical:", print_process(parse_process(s)))

# Recursive capabilities are compared as infinite trees: a chain that binds
# A forever has one canonical shape however it is folded.
once = parse_caps("rec x.{bind(A)x}")
twice = parse_caps("rec y.{bind(A){bind(A)y}}")
print("folded   :", print_caps(once), "==", print_caps(twice))
# unfolding changes the syntax but not the canonical printout
print("unfolded :", print_caps(unfold(once)))

a = parse_process("rec x.{bind(A){conv(x.E | {}.C)}}.E")
b = parse_process("{bind(A){conv(rec z.{bind(A){conv(z.E | {}.C)}}.E | {}.C)}}.E")
print("enzyme equal after one unfolding:", process_equal(a, b), bisimilar(a, b))
