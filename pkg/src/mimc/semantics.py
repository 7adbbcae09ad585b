"""Labelled reduction semantics and bounded state-space exploration.

``local_redexes`` instantiates the axioms of the calculus on the top-level
molecules of a process.  ``enabled_transitions`` then places each redex in
its parallel context: molecules that are not reactants discharge promoters
and must not be inhibitors.  A step is enabled when no promoter is left.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .actions import (
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
    canonicalize,
    render_basic,
    render_process,
    strip_process,
    strip_species,
)
from .terms import (
    Cleave,
    CovalentBond,
    CovalentMod,
    CovBind,
    CovMod,
    Convert,
    NonCovalent,
    NonCovBind,
    Process,
    Produce,
    Species,
    summands,
)

_PAIRS = (NcBond, NcUnbond, CovBond)

DEFAULT_DEPTH = 16
DEFAULT_MAX_STATES = 10_000


@dataclass(frozen=True)
class GatedTransition:
    """A redex before its parallel context is taken into account.

    ``target`` is the local result (what the reactants become) and
    ``reactants`` indexes the molecules of the source that took part.
    """

    promoters: frozenset
    inhibitors: frozenset
    action: object
    target: Process
    reactants: tuple


@dataclass(frozen=True)
class Transition:
    action: object
    target: Process

    def __str__(self):
        return f"--{print_action(self.action)}--> {render_process(self.target)}"


def local_redexes(p: Process) -> list:
    """Every instance of the reduction axioms over the molecules of ``p``."""
    ms = p.molecules
    names = [strip_species(m) for m in ms]
    out = []

    def emit(nu, iota, action, target, reactants):
        out.append(GatedTransition(nu, iota, action, Process(tuple(target)), reactants))

    for i, m in enumerate(ms):
        n = names[i]
        if isinstance(m.body, NonCovalent):
            l, r = m.body.left, m.body.right
            emit(frozenset(), frozenset(), NcUnbond(strip_species(l), strip_species(r)), (l, r), (i,))
        for b in sorted(summands(m.caps), key=render_basic):
            nu, iota = b.promoters, b.inhibitors
            if n in iota:
                continue
            match b.op:
                case NonCovBind(partner, cont) | CovBind(partner, cont):
                    covalent = isinstance(b.op, CovBind)
                    for j, other in enumerate(ms):
                        if j == i or names[j] != partner or partner in iota:
                            continue
                        if covalent:
                            product = Species(cont, CovalentBond(m, other))
                            action = CovBond(n, partner)
                        else:
                            product = Species(cont, NonCovalent(m, other))
                            action = NcBond(n, partner)
                        emit(nu, iota, action, (product,), (i, j))
                case CovMod(q, cont):
                    emit(nu, iota, Modification(q, n), (Species(cont, CovalentMod(q, m)),), (i,))
                case Convert(products):
                    emit(nu, iota, Conversion(n, strip_process(products)), products.molecules, (i,))
                case Produce(products):
                    emit(nu, iota, Production(n, strip_process(products)), (m,) + products.molecules, (i,))
                case Cleave(target):
                    if target in iota:
                        continue
                    for j, other in enumerate(ms):
                        if j == i or names[j] != target:
                            continue
                        match other.body:
                            case CovalentBond(l, r):
                                emit(nu, iota, CleaveBond(n, target), (m, l, r), (i, j))
                            case CovalentMod(_, s):
                                emit(nu, iota, CleaveMod(n, target), (m, s), (i, j))
    return out


def enabled_transitions(p: Process) -> list:
    """Transitions of ``p`` whose promoters are all present in the rest of
    the composition and whose inhibitors are all absent from it."""
    p = canonicalize(p)
    ms = p.molecules
    names = [strip_species(m) for m in ms]
    kept = {}  # canonical forms make congruent targets identical
    for g in local_redexes(p):
        rest = [k for k in range(len(ms)) if k not in g.reactants]
        present = {names[k] for k in rest}
        if g.promoters - present or g.inhibitors & present:
            continue
        target = canonicalize(Process(g.target.molecules + tuple(ms[k] for k in rest)))
        action = g.action.sorted_pair() if isinstance(g.action, _PAIRS) else g.action
        kept.setdefault((action, target), Transition(action, target))
    result = list(kept.values())
    result.sort(key=lambda t: (print_action(t.action), render_process(t.target)))
    return result


@dataclass
class Lts:
    """Bounded labelled transition system.

    States are canonical processes, identified up to structural congruence.
    ``truncated`` is set when some reachable state was left unexplored;
    ``complete_depth`` is then the largest ``d`` such that every state
    reachable in at most ``d`` steps is present.
    """

    states: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    depths: list = field(default_factory=list)
    initial: int = 0
    truncated: bool = False
    complete_depth: int = 0
    _index: dict = field(default_factory=dict, repr=False)

    def find(self, p: Process):
        return self._index.get(canonicalize(p))

    def _add(self, p: Process, depth: int) -> int:
        self.states.append(p)
        self.depths.append(depth)
        i = len(self.states) - 1
        self._index[p] = i
        return i

    def successors(self, i: int) -> list:
        return [(a, j) for s, a, j in self.edges if s == i]

    def to_json(self) -> dict:
        return {
            "states": [render_process(s) for s in self.states],
            "edges": [{"from": s, "action": print_action(a), "to": t} for s, a, t in self.edges],
            "initial": self.initial,
            "truncated": self.truncated,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_dot(self) -> str:
        lines = ["digraph lts {", "  node [shape=box];"]
        for i, s in enumerate(self.states):
            attrs = f'label={json.dumps(render_process(s))}'
            if i == self.initial:
                attrs += ", penwidth=2"
            lines.append(f"  s{i} [{attrs}];")
        for s, a, t in self.edges:
            lines.append(f"  s{s} -> s{t} [label={json.dumps(print_action(a))}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def explore(p: Process, max_depth: int = DEFAULT_DEPTH, max_states: int = DEFAULT_MAX_STATES) -> Lts:
    """Breadth-first closure of ``enabled_transitions`` from ``p``."""
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    if max_states < 1:
        raise ValueError("max_states must be >= 1")
    lts = Lts()
    lts._add(canonicalize(p), 0)
    queue = deque([0])
    complete = max_depth
    while queue:
        i = queue.popleft()
        steps = enabled_transitions(lts.states[i])
        d = lts.depths[i]
        if d >= max_depth:
            if steps:
                lts.truncated = True
            continue
        for t in steps:
            j = lts.find(t.target)
            if j is None:
                if len(lts.states) >= max_states:
                    lts.truncated = True
                    complete = min(complete, d)
                    continue
                j = lts._add(t.target, d + 1)
                queue.append(j)
            lts.edges.append((i, t.action, j))
    lts.complete_depth = complete
    return lts
