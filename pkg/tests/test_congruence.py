import random

from hypothesis import given, settings, strategies as st

from mimc import (
    bisimilar,
    canonicalize,
    caps_equal,
    parse_caps,
    parse_process,
    print_caps,
    print_process,
    process_equal,
    species_equal,
    parse_species,
    unfold,
)

from termgen import SHUFFLES, random_process, shuffle

seeds = st.integers(0, 2**32 - 1)


def test_par_reorder_and_unit():
    p = parse_process("{}.B | {}.A | 0")
    assert print_process(p) == "{}.A | {}.B"


def test_compound_commutativity():
    assert print_process(parse_process("{}.({}.B : {}.A)")) == "{}.({}.A:{}.B)"


def test_sum_idempotence_and_order():
    p = parse_process("{bind(B){} + mod('p){} + bind(B){}}.A")
    assert print_process(p) == "{bind(B){} + mod('p){}}.A"


def test_rec_unfolding_equal():
    mu = parse_caps("rec x.{bind(A){conv(x.E | {}.C)}}")
    assert caps_equal(mu, unfold(mu))
    assert caps_equal(unfold(mu), mu)


def test_sum_commutativity():
    assert caps_equal(parse_caps("{bind(A){} + bind(B){}}"), parse_caps("{bind(B){} + bind(A){}}"))


def test_alpha_conversion():
    a = parse_caps("rec x.{conv(x.E | {}.C)}")
    b = parse_caps("rec y.{conv(y.E | {}.C)}")
    assert caps_equal(a, b)
    assert print_caps(a) == print_caps(b)


def test_regular_tree_equality_beyond_one_unfolding():
    # both denote an infinite chain of bind(A)
    a = parse_caps("rec x.{bind(A){bind(A)x}}")
    b = parse_caps("rec y.{bind(A)y}")
    assert caps_equal(a, b)
    assert print_caps(a) == print_caps(b)


def test_rec_differs_from_finite_prefix():
    assert not caps_equal(parse_caps("rec x.{bind(A)x}"), parse_caps("{bind(A){}}"))


def test_process_equal_examples():
    p = parse_process("{bind(B){}}.A | {}.C")
    assert process_equal(p, parse_process("{bind(B){}}.A | {}.C | 0"))
    assert process_equal(parse_process("{}.A | {}.B"), parse_process("{}.B | {}.A"))
    assert not process_equal(parse_process("{bind(B){}}.A"), parse_process("{bind(C){}}.A"))


def test_multiplicity_matters():
    assert not process_equal(parse_process("{}.A | {}.A"), parse_process("{}.A"))


def test_contingencies_distinguish():
    assert not caps_equal(parse_caps("{[+B;-]conv(0)}"), parse_caps("{conv(0)}"))
    assert not caps_equal(parse_caps("{[+B;-]conv(0)}"), parse_caps("{[+;-B]conv(0)}"))


def test_species_equal_with_partner_names_in_any_order():
    a = parse_species("{bind(E2F1:DP1){}}.pRb")
    b = parse_species("{bind(DP1:E2F1){}}.pRb")
    assert species_equal(a, b)


def test_canonical_form_of_unfolded_enzyme():
    folded = parse_process("rec x.{bind(A){conv(x.E | {}.C)}}.E")
    unfolded = parse_process("{bind(A){conv(rec x.{bind(A){conv(x.E | {}.C)}}.E | {}.C)}}.E")
    assert print_process(unfolded) == print_process(folded) == "rec x1.{bind(A){conv(x1.E | {}.C)}}.E"


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_canonicalize_idempotent(seed):
    p = random_process(random.Random(seed))
    c = canonicalize(p)
    assert canonicalize(c) == c


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from(SHUFFLES))
def test_shuffles_preserve_congruence(seed, kind):
    rng = random.Random(seed)
    p = random_process(rng)
    q = shuffle(p, kind, rng)
    assert process_equal(p, q)
    assert bisimilar(p, q)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_equivalence_relation(seed):
    rng = random.Random(seed)
    p = random_process(rng)
    q = shuffle(p, rng.choice(SHUFFLES), rng)
    r = shuffle(q, rng.choice(SHUFFLES), rng)
    assert process_equal(p, p)
    assert process_equal(p, q) == process_equal(q, p)
    assert process_equal(p, r)
    other = random_process(rng)
    assert process_equal(p, other) == process_equal(other, p)


@settings(max_examples=60, deadline=None)
@given(seeds, seeds)
def test_canonical_forms_agree_with_direct_bisimulation(s1, s2):
    p = random_process(random.Random(s1), max_molecules=2)
    q = random_process(random.Random(s2), max_molecules=2)
    for a, b in ((p, q), (p, shuffle(p, "unfold", random.Random(s2)))):
        if len(a) == len(b):
            assert process_equal(a, b) == bisimilar(a, b)
