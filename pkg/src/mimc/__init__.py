"""Executable MIM calculus.

Terms describe molecules with interaction capabilities; the reduction
semantics computes which reactions a mixture can undergo; consistency checks
relate terms to the molecular interaction maps they encode.

Typical use::

    >>> from mimc import parse_process, enabled_transitions, print_action
    >>> p = parse_process("{bind(B){}}.A | {bind(A){}}.B")
    >>> [print_action(t.action) for t in enabled_transitions(p)]
    ['ncb(A,B)']
"""
from .actions import (
    Action,
    CleaveBond,
    CleaveMod,
    Conversion,
    CovBond,
    Modification,
    NcBond,
    NcUnbond,
    Production,
    print_action,
)
from .congruence import (
    bisimilar,
    canonical_caps,
    canonical_name,
    canonical_species,
    canonicalize,
    caps_equal,
    process_equal,
    species_equal,
    strip_process,
    strip_species,
)
from .consistency import (
    Consistent,
    ConsistentUpToDepth,
    Inconsistent,
    PositionEntry,
    Prop1Report,
    Witness,
    check_semantic,
    check_strong,
    check_weak,
    enumerate_positions,
    proposition1_harness,
)
from .diagram import (
    DiagramError,
    DiagramSpec,
    Reaction,
    SpeciesDecl,
    SpeciesTable,
    compile_table,
    instantiate,
    random_diagram,
)
from .semantics import (
    DEFAULT_DEPTH,
    DEFAULT_MAX_STATES,
    GatedTransition,
    Lts,
    Transition,
    enabled_transitions,
    explore,
    local_redexes,
)
from .syntax import (
    ParseError,
    SourceSpan,
    parse_caps,
    parse_name,
    parse_process,
    parse_species,
    print_caps,
    print_name,
    print_process,
)
from .terms import (
    EMPTY,
    NIL,
    Basic,
    Cleave,
    CleaveTargetError,
    ContractivityError,
    Convert,
    CovalentBond,
    CovalentMod,
    CovBind,
    CovMod,
    Elementary,
    FreeVariableError,
    Name,
    NonCovalent,
    NonCovBind,
    Process,
    Produce,
    Rec,
    Species,
    Sum,
    TermError,
    Var,
    bond_of,
    caps,
    complex_of,
    elem,
    free_vars,
    mod_of,
    par,
    substitute,
    summands,
    unfold,
)

__version__ = "0.1.0"

_SUBMODULES = {"actions", "cli", "congruence", "consistency", "diagram", "semantics", "syntax", "terms"}
__all__ = [n for n in dir() if not n.startswith("_") and n not in _SUBMODULES]
