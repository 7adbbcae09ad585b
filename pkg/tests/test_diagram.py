import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from mimc import (
    Consistent,
    DiagramError,
    DiagramSpec,
    caps_equal,
    check_strong,
    check_weak,
    compile_table,
    elem,
    instantiate,
    parse_caps,
    parse_name,
    parse_process,
    process_equal,
    random_diagram,
    strip_process,
)

from models import ABC_TEXT, DEMOS, ENZYME_CAPS, P1_TEXT

seeds = st.integers(0, 2**32 - 1)


def _load(name):
    spec = DiagramSpec.load(DEMOS / name)
    return spec, compile_table(spec)


def test_three_species_diagram():
    spec, table = _load("abc.mimd.json")
    assert process_equal(instantiate(table, spec.counts()), parse_process(ABC_TEXT))


def test_enzyme_diagram_closes_with_rec():
    spec, table = _load("enzyme.mimd.json")
    assert caps_equal(table[elem("E")], parse_caps(ENZYME_CAPS))
    assert caps_equal(table[parse_name("E:A")], parse_caps(f"{{conv({ENZYME_CAPS}.E | {{}}.C)}}"))


def test_transcription_diagram_gives_reference_network():
    spec, table = _load("e2f1.mimd.json")
    assert process_equal(instantiate(table, spec.counts()), parse_process(P1_TEXT))


def test_empty_diagram():
    spec = DiagramSpec.from_dict({"interpretation": "explicit"})
    table = compile_table(spec)
    assert table == {}
    assert len(instantiate(table, {})) == 0


def test_zero_counts_give_empty_process():
    spec, table = _load("abc.mimd.json")
    assert len(instantiate(table, {n: 0 for n in spec.counts()})) == 0


def test_counts_by_string_name():
    _, table = _load("abc.mimd.json")
    p = instantiate(table, {"A:B": 1})
    (m,) = p.molecules
    assert strip_process(p) == {parse_name("(A:B)")}
    assert caps_equal(m.caps, parse_caps("{bind(C){}}"))


@pytest.mark.parametrize(
    "data, fragment",
    [
        ({"interpretation": "combinatorial"}, "explicit interpretation"),
        ({"reactions": [{"kind": "ncb", "participants": ["A", "B"]}]}, "unresolvable participant"),
        (
            {"species": [{"id": "A"}], "reactions": [{"kind": "ncb", "participants": ["A"]}]},
            "takes 2 participant",
        ),
        ({"species": [{"id": "A"}], "reactions": [{"kind": "frob", "participants": ["A"]}]}, "unknown reaction"),
        ({"species": [{"id": "A"}], "reactions": [{"kind": "mod", "participants": ["A"]}]}, "modtype"),
        (
            {"species": [{"id": "A"}, {"id": "B"}], "reactions": [{"kind": "cleave", "participants": ["A", "B"]}]},
            "cleave target",
        ),
        (
            {"species": [{"id": "A"}], "reactions": [{"kind": "conv", "participants": ["A"], "stimulators": ["A"]}]},
            "stimulators",
        ),
        ({"species": [{"id": "A", "count": -1}]}, "non-negative"),
        ({"species": [{"id": "A&"}]}, "bad species name"),
        ({"species": [{"id": "A", "kind": "blob"}]}, "unknown species kind"),
        ({"species": [{"id": "A"}], "reactions": [{"kind": "conv", "participants": ["A"]}]}, "needs products"),
    ],
)
def test_rejected_diagrams(data, fragment):
    with pytest.raises(DiagramError) as e:
        DiagramSpec.from_dict(data)
    assert fragment in str(e.value)


def test_unknown_species_in_counts():
    _, table = _load("abc.mimd.json")
    with pytest.raises(DiagramError):
        instantiate(table, {"Z": 1})
    with pytest.raises(DiagramError):
        instantiate(table, {"A": -1})


def test_table_json():
    _, table = _load("enzyme.mimd.json")
    d = table.to_dict()
    assert set(d) == {"A", "C", "E", "(A:E)"}
    assert json.dumps(d)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_random_diagrams_are_strongly_consistent(seed):
    spec = random_diagram(random.Random(seed))
    p = instantiate(compile_table(spec), spec.counts())
    assert check_weak(p) == Consistent()
    assert check_strong(p) == Consistent()


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_compilation_is_deterministic(seed):
    spec = random_diagram(random.Random(seed))
    assert compile_table(spec) == compile_table(spec)
    again = DiagramSpec.from_dict(json.loads(json.dumps(spec.to_dict())))
    assert compile_table(again) == compile_table(spec)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 3))
def test_adding_molecules_only_adds(seed, extra):
    spec = random_diagram(random.Random(seed))
    table = compile_table(spec)
    counts = spec.counts()
    n = next(iter(counts))
    more = dict(counts)
    more[n] += extra
    a, b = instantiate(table, counts), instantiate(table, more)
    assert len(b) == len(a) + extra
    assert set(a.molecules) <= set(b.molecules)
