"""Reference models used across the test suite."""
from pathlib import Path

from mimc import parse_process

ROOT = Path(__file__).resolve().parent.parent
DEMOS = ROOT / "demos"

# E2F1 / DP1 / pRb regulation of the E2 promoter
MU1 = "{bind(DP1){bind(E2){} + bind(pRb){bind(E2){}}}}"
MU2 = "{bind(E2F1){bind(E2){} + bind(pRb){bind(E2){}}}}"
MU3 = "{bind(E2F1:DP1){bind(E2){}}}"
MU4 = "{bind(E2F1:DP1){} + bind((E2F1:DP1):pRb){}}"
MU_DIMER = "{bind(E2){} + bind(pRb){bind(E2){}}}"
DNA = "{[+((E2F1:DP1):E2); -(((E2F1:DP1):pRb):E2)] prod({}.mRNA)}.DNA"
DIMER = f"{MU_DIMER}.({MU1}.E2F1 : {MU2}.DP1)"

P1_TEXT = (
    f"{MU1}.E2F1 | {MU1}.E2F1 | {MU2}.DP1 | {MU2}.DP1 | {MU3}.pRb | {MU3}.pRb | {MU4}.E2 | {DNA}"
)
P2_TEXT = f"{MU1}.E2F1 | {MU2}.DP1 | {MU3}.pRb | {MU3}.pRb | {MU4}.E2 | {DNA} | {DIMER}"
P3_TEXT = f"{MU1}.E2F1 | {MU2}.DP1 | {MU3}.pRb | {MU3}.pRb | {DNA} | {{}}.({DIMER} : {MU4}.E2)"
# an extra top-level trimer:E2 complex, which inhibits transcription
TRIMER_E2 = f"{{}}.({{}}.({DIMER} : {{bind(E2){{}}}}.pRb) : {{}}.E2)"

# three species: A binds B, A:B binds C, B can be phosphorylated
ABC_TEXT = (
    "{bind(B){bind(C){}}}.A | {bind(B){bind(C){}}}.A"
    " | {bind(A){bind(C){}} + mod('p){}}.B | {bind(A){bind(C){}} + mod('p){}}.B"
    " | {bind(A:B){}}.C"
)

ENZYME_CAPS = "rec x.{bind(A){conv(x.E | {}.C)}}"
ENZYME = f"{ENZYME_CAPS}.E"
ENZYME_WITH_SUBSTRATE = f"{ENZYME} | {{}}.A"

# binding is one-sided in the first, reciprocal in the second
WEAK_ONLY = "{bind(B){}}.A | {}.B"
STRONG = "{bind(B){}}.A | {bind(A){}}.B"
CLASH = "{bind(B){bind(C){}}}.A | {}.A"


def p1():
    return parse_process(P1_TEXT)


def p2():
    return parse_process(P2_TEXT)


def p3():
    return parse_process(P3_TEXT)
