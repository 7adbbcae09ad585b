"""Consistency of terms with respect to MIM diagrams.

A term is weakly syntactically consistent when every capability position
that belongs to a given species name holds the same capability.  Positions
are enumerated structurally: the capability of every molecule and of every
component of a compound, the continuation of every bind, covalent bind and
modification summand (attached to the name of the compound it creates), and
every position inside the products of conversions and productions.

Strong consistency additionally requires bindings to be reciprocal.
Semantic consistency is checked on a bounded exploration of the state space.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .congruence import (
    canonical_name,
    canonicalize,
    caps_classes,
    caps_equal,
    render_basic,
    render_caps,
    render_name,
    render_process,
)
from .diagram import compile_table, instantiate, random_diagram
from .semantics import DEFAULT_DEPTH, DEFAULT_MAX_STATES, explore
from .terms import (
    Basic,
    Capability,
    CovalentBond,
    CovalentMod,
    CovBind,
    CovMod,
    Convert,
    NonCovalent,
    NonCovBind,
    Process,
    Produce,
    Rec,
    Species,
    Sum,
    bond_of,
    complex_of,
    free_vars,
    mod_of,
    substitute,
    summands,
)


@dataclass(frozen=True)
class PositionEntry:
    name: Species
    caps: Capability
    path: str

    def to_json(self) -> dict:
        return {"name": render_name(self.name), "caps": render_caps(self.caps), "path": self.path}


@dataclass(frozen=True)
class Witness:
    first: PositionEntry
    second: PositionEntry
    reason: str
    missing: Basic | None = None

    def to_json(self) -> dict:
        out = {"first": self.first.to_json(), "second": self.second.to_json(), "reason": self.reason}
        if self.missing is not None:
            out["missing"] = render_basic(self.missing)
        return out


@dataclass(frozen=True)
class Consistent:
    def to_json(self) -> dict:
        return {"verdict": "consistent", "depth": None, "witness": None}


@dataclass(frozen=True)
class ConsistentUpToDepth:
    depth: int

    def to_json(self) -> dict:
        return {"verdict": "consistent-up-to-depth", "depth": self.depth, "witness": None}


@dataclass(frozen=True)
class Inconsistent:
    witness: Witness
    depth: int | None = None

    def to_json(self) -> dict:
        return {"verdict": "inconsistent", "depth": self.depth, "witness": self.witness.to_json()}


# -- positions -------------------------------------------------------------

def _close(c: Capability, env: dict) -> Capability:
    for v in free_vars(c):
        c = substitute(c, v, env[v])
    return c


def enumerate_positions(p: Process) -> list:
    """One entry per capability position of ``p``.

    Positions are taken on the canonical form, so congruent processes give
    the same entries; paths index into that form.  Rec bodies are visited
    once; a variable position yields the closed capability of its binder and
    is not descended into.
    """
    out = []
    _process(canonicalize(p), {}, "", out)
    return out


def _process(p: Process, env: dict, path: str, out: list):
    for k, m in enumerate(p.molecules):
        _species(m, env, f"{path}{k}", out)


def _species(s: Species, env: dict, path: str, out: list):
    n = canonical_name(s)
    out.append(PositionEntry(n, _close(s.caps, env), path))
    _caps(s.caps, n, env, path, out)
    match s.body:
        case NonCovalent(l, r) | CovalentBond(l, r):
            _species(l, env, path + ".0", out)
            _species(r, env, path + ".1", out)
        case CovalentMod(_, sp):
            _species(sp, env, path + ".0", out)


def _caps(c: Capability, n: Species, env: dict, path: str, out: list):
    match c:
        case Rec(var, body):
            _caps(body, n, {**env, var: _close(c, env)}, path, out)
        case Sum(items):
            for b in sorted(items, key=render_basic):
                _basic(b, n, env, path, out)


def _basic(b: Basic, n: Species, env: dict, path: str, out: list):
    match b.op:
        case NonCovBind(partner, cont):
            cname = canonical_name(complex_of(n, partner))
            tag = f"bind({render_name(partner)})"
        case CovBind(partner, cont):
            cname = canonical_name(bond_of(n, partner))
            tag = f"cbind({render_name(partner)})"
        case CovMod(q, cont):
            cname = canonical_name(mod_of(q, n))
            tag = f"mod('{q})"
        case Convert(products):
            _process(products, env, f"{path}/conv/", out)
            return
        case Produce(products):
            _process(products, env, f"{path}/prod/", out)
            return
        case _:
            return
    sub = f"{path}/{tag}"
    out.append(PositionEntry(cname, _close(cont, env), sub))
    _caps(cont, cname, env, sub, out)


# -- checks ----------------------------------------------------------------

def _groups(entries) -> dict:
    groups = {}
    for e in entries:
        groups.setdefault(e.name, []).append(e)
    return groups


def _first_clash(groups: dict):
    for name, es in groups.items():
        if len(es) < 2:
            continue
        cls = caps_classes([e.caps for e in es])
        for k, c in enumerate(cls):
            if c != cls[0]:
                return es[0], es[k]
    return None


def check_weak(p: Process):
    """Same-name positions carry congruent capabilities."""
    groups = _groups(enumerate_positions(p))
    clash = _first_clash(groups)
    if clash is None:
        return Consistent()
    a, b = clash
    return Inconsistent(Witness(a, b, f"two positions of {render_name(a.name)} with different capabilities"))


def _has_reciprocal(holder: PositionEntry, b: Basic, other: PositionEntry):
    kind = type(b.op)
    for c in summands(other.caps):
        if (
            type(c.op) is kind
            and c.op.partner == holder.name
            and c.promoters == b.promoters
            and c.inhibitors == b.inhibitors
            and caps_equal(c.op.cont, b.op.cont)
        ):
            return True
    return False


def check_strong(p: Process):
    """Weak consistency plus reciprocal bind and covalent-bind capabilities."""
    verdict = check_weak(p)
    if not isinstance(verdict, Consistent):
        return verdict
    reps = {}
    for e in enumerate_positions(p):
        reps.setdefault(e.name, e)
    for e1 in reps.values():
        for b in sorted(summands(e1.caps), key=render_basic):
            if not isinstance(b.op, (NonCovBind, CovBind)):
                continue
            e2 = reps.get(b.op.partner)
            if e2 is None or _has_reciprocal(e1, b, e2):
                continue
            missing = Basic(type(b.op)(e1.name, b.op.cont), b.promoters, b.inhibitors)
            reason = f"{render_name(e2.name)} lacks {render_basic(missing)}"
            return Inconsistent(Witness(e1, e2, reason, missing))
    return Consistent()


def check_semantic(p: Process, max_depth: int = DEFAULT_DEPTH, max_states: int = DEFAULT_MAX_STATES):
    """Top-level molecules of one name carry congruent capabilities in every
    state reachable within the bounds."""
    if max_depth < 0 or max_states < 1:
        raise ValueError("bounds must be positive")
    lts = explore(p, max_depth, max_states)
    seen = {}  # name -> {caps: (state, molecule)}
    for i, s in enumerate(lts.states):
        for k, m in enumerate(s.molecules):
            n = canonical_name(m)
            seen.setdefault(n, {}).setdefault(m.caps, (i, k))
    best = None
    for n, occ in seen.items():
        if len(occ) < 2:
            continue
        capss = list(occ)
        cls = caps_classes(capss)
        # earliest occurrence of each class
        first = {}
        for c, k in zip(capss, cls):
            if k not in first or occ[c] < occ[first[k]]:
                first[k] = c
        if len(first) < 2:
            continue
        a, b = sorted(first.values(), key=lambda c: occ[c])[:2]
        depth = lts.depths[occ[b][0]]
        if best is None or depth < best[0]:
            best = (depth, n, a, b)
    if best is not None:
        depth, n, a, b = best
        ea = PositionEntry(n, a, _state_path(lts, seen[n][a]))
        eb = PositionEntry(n, b, _state_path(lts, seen[n][b]))
        reason = f"reachable molecules of {render_name(n)} with different capabilities"
        return Inconsistent(Witness(ea, eb, reason), depth)
    if lts.truncated:
        return ConsistentUpToDepth(lts.complete_depth)
    return Consistent()


def _state_path(lts, where) -> str:
    i, k = where
    return f"state {i} (depth {lts.depths[i]}) molecule {k}: {render_process(lts.states[i])}"


# -- weak implies semantic, on random tables -------------------------------

@dataclass
class Prop1Report:
    seed: int
    trials: int
    depth: int
    checked: int = 0
    up_to_depth: int = 0
    weak_failures: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.weak_failures and not self.counterexamples

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "depth": self.depth,
            "checked": self.checked,
            "up_to_depth": self.up_to_depth,
            "weak_failures": self.weak_failures,
            "counterexamples": self.counterexamples,
            "ok": self.ok,
        }


def proposition1_harness(seed: int, trials: int, depth: int = 4, max_states: int = 2000) -> Prop1Report:
    """Check on random diagram-derived terms that weak syntactic consistency
    implies semantic consistency within the exploration bound."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    report = Prop1Report(seed, trials, depth)
    for _ in range(trials):
        spec = random_diagram(rng)
        p = instantiate(compile_table(spec), spec.counts())
        text = render_process(p)
        weak = check_weak(p)
        if not isinstance(weak, Consistent):
            report.weak_failures.append({"term": text, "verdict": weak.to_json()})
            continue
        sem = check_semantic(p, depth, max_states)
        report.checked += 1
        if isinstance(sem, Inconsistent):
            report.counterexamples.append({"term": text, "verdict": sem.to_json()})
        elif isinstance(sem, ConsistentUpToDepth):
            report.up_to_depth += 1
    return report
