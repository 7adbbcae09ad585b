"""Compile explicit-interpretation MIM diagrams into calculus terms.

A diagram lists species and reactions.  Every species name (declared,
derived by a binding or modification, or produced by a conversion) gets one
capability with a summand per reaction it takes part in.  Binding reactions
install the same summand on both partners, which makes the resulting terms
strongly syntactically consistent.  Capabilities that refer back to a name
already being defined are closed with a rec binder.

JSON layout::

    {"interpretation": "explicit",
     "species":   [{"id": "A", "kind": "elementary", "count": 2}, ...],
     "reactions": [{"kind": "ncb", "participants": ["A", "B"],
                    "promoters": [], "inhibitors": []},
                   {"kind": "mod", "participants": ["B"], "modtype": "p"},
                   {"kind": "conv", "participants": ["(E:A)"],
                    "products": ["C", {"name": "E", "count": 1}]}, ...]}
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .congruence import canonical_caps, canonical_name, canonicalize, render_caps, render_name
from .syntax import ParseError, parse_name
from .terms import (
    EMPTY,
    Basic,
    Cleave,
    CovalentBond,
    CovalentMod,
    CovBind,
    CovMod,
    Convert,
    Elementary,
    NonCovalent,
    NonCovBind,
    Process,
    Produce,
    Rec,
    Species,
    Sum,
    Var,
    bond_of,
    complex_of,
    elem,
    free_vars,
    mod_of,
)

ARITY = {"ncb": 2, "cb": 2, "mod": 1, "cleave": 2, "conv": 1, "prod": 1, "degrade": 1}
_REJECTED_CONTINGENCIES = ("stimulators", "catalysts")


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class SpeciesDecl:
    id: Species
    kind: str = "elementary"
    count: int = 0


@dataclass(frozen=True)
class Reaction:
    kind: str
    participants: tuple
    promoters: frozenset = frozenset()
    inhibitors: frozenset = frozenset()
    products: tuple = ()  # (name, multiplicity) pairs
    modtype: str | None = None

    def product_names(self) -> list:
        a = self.participants
        match self.kind:
            case "ncb":
                return [canonical_name(complex_of(a[0], a[1]))]
            case "cb":
                return [canonical_name(bond_of(a[0], a[1]))]
            case "mod":
                return [canonical_name(mod_of(self.modtype, a[0]))]
            case "conv" | "prod":
                return [n for n, _ in self.products]
        return []


@dataclass(frozen=True)
class DiagramSpec:
    species: tuple = ()
    reactions: tuple = ()

    @classmethod
    def from_dict(cls, data: dict) -> "DiagramSpec":
        interp = data.get("interpretation", "explicit")
        if interp != "explicit":
            raise DiagramError(
                f"only the explicit interpretation is supported, got {interp!r}; "
                "combinatorial and heuristic readings leave the reaction set implicit"
            )
        species = tuple(
            SpeciesDecl(_name(s["id"]), s.get("kind", "elementary"), _count(s.get("count", 0), s["id"]))
            for s in data.get("species", [])
        )
        for s in species:
            if s.kind not in ("elementary", "complex"):
                raise DiagramError(f"unknown species kind {s.kind!r}")
        reactions = tuple(_reaction(r) for r in data.get("reactions", []))
        spec = cls(species, reactions)
        spec.validate()
        return spec

    @classmethod
    def loads(cls, text: str) -> "DiagramSpec":
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path) -> "DiagramSpec":
        return cls.loads(Path(path).read_text())

    def to_dict(self) -> dict:
        out = []
        for r in self.reactions:
            d = {
                "kind": r.kind,
                "participants": [render_name(n) for n in r.participants],
                "promoters": sorted(map(render_name, r.promoters)),
                "inhibitors": sorted(map(render_name, r.inhibitors)),
            }
            if r.products:
                d["products"] = [{"name": render_name(n), "count": k} for n, k in r.products]
            if r.modtype is not None:
                d["modtype"] = r.modtype
            out.append(d)
        return {
            "interpretation": "explicit",
            "species": [{"id": render_name(s.id), "kind": s.kind, "count": s.count} for s in self.species],
            "reactions": out,
        }

    def counts(self) -> dict:
        out = {}
        for s in self.species:
            out[s.id] = out.get(s.id, 0) + s.count
        return out

    def validate(self):
        known = {s.id for s in self.species}
        pending = list(self.reactions)
        changed = True
        while changed:
            changed = False
            for r in list(pending):
                if all(p in known for p in r.participants):
                    known.update(r.product_names())
                    pending.remove(r)
                    changed = True
        if pending:
            r = pending[0]
            missing = next(p for p in r.participants if p not in known)
            raise DiagramError(f"unresolvable participant {render_name(missing)} in {r.kind} reaction")


def _name(text) -> Species:
    try:
        return parse_name(text)
    except ParseError as e:
        raise DiagramError(f"bad species name {text!r}: {e}") from None


def _count(v, what) -> int:
    if not isinstance(v, int) or v < 0:
        raise DiagramError(f"count for {what} must be a non-negative integer")
    return v


def _reaction(d: dict) -> Reaction:
    kind = d.get("kind")
    if kind not in ARITY:
        raise DiagramError(f"unknown reaction kind {kind!r}")
    for key in _REJECTED_CONTINGENCIES:
        if d.get(key):
            raise DiagramError(
                f"{key} contingencies only change reaction rates and have no counterpart in the calculus"
            )
    if d.get("combinatorial"):
        raise DiagramError("combinatorial expansion of reactions is not supported")
    parts = tuple(_name(p) for p in d.get("participants", []))
    if len(parts) != ARITY[kind]:
        raise DiagramError(f"{kind} takes {ARITY[kind]} participant(s), got {len(parts)}")
    modtype = d.get("modtype")
    if kind == "mod" and not modtype:
        raise DiagramError("mod reaction needs a modtype")
    if kind == "cleave" and not isinstance(parts[1].body, (CovalentBond, CovalentMod)):
        raise DiagramError("cleave target must be a covalent bond or modification")
    products = []
    for p in d.get("products", []):
        if isinstance(p, str):
            products.append((_name(p), 1))
        else:
            products.append((_name(p["name"]), _count(p.get("count", 1), p["name"])))
    if kind in ("conv", "prod") and not products:
        raise DiagramError(f"{kind} reaction needs products")
    if kind == "degrade" and products:
        raise DiagramError("degrade reaction takes no products")
    return Reaction(
        kind,
        parts,
        frozenset(map(_name, d.get("promoters", []))),
        frozenset(map(_name, d.get("inhibitors", []))),
        tuple(products),
        modtype,
    )


def _subnames(n: Species):
    yield n
    match n.body:
        case NonCovalent(l, r) | CovalentBond(l, r):
            yield from _subnames(l)
            yield from _subnames(r)
        case CovalentMod(_, s):
            yield from _subnames(s)


class SpeciesTable(dict):
    """Mapping from names to closed capabilities."""

    def species(self, n: Species) -> Species:
        """The molecule of name ``n``, components dressed from the table."""
        n = canonical_name(n)
        if n not in self:
            raise DiagramError(f"unknown species {render_name(n)}")
        match n.body:
            case Elementary():
                body = n.body
            case NonCovalent(l, r):
                body = NonCovalent(self.species(l), self.species(r))
            case CovalentBond(l, r):
                body = CovalentBond(self.species(l), self.species(r))
            case CovalentMod(q, s):
                body = CovalentMod(q, self.species(s))
        return Species(self[n], body)

    def to_dict(self) -> dict:
        return {render_name(n): render_caps(c) for n, c in self.items()}


@dataclass
class _Compiler:
    spec: DiagramSpec
    incident: dict = field(default_factory=dict)
    var_of: dict = field(default_factory=dict)

    def run(self) -> SpeciesTable:
        names = set()
        for s in self.spec.species:
            names.update(_subnames(s.id))
        for r in self.spec.reactions:
            for n in list(r.participants) + r.product_names():
                names.update(_subnames(n))
        order = sorted(names, key=render_name)
        self.var_of = {n: f"x{i + 1}" for i, n in enumerate(order)}
        self.incident = {n: [] for n in order}
        for r in self.spec.reactions:
            a = r.participants
            if r.kind in ("ncb", "cb"):
                product = r.product_names()[0]
                self.incident[a[0]].append((r, a[1], product))
                if a[1] != a[0]:
                    self.incident[a[1]].append((r, a[0], product))
            else:
                self.incident[a[0]].append((r, None, None))
        return SpeciesTable((n, canonical_caps(self.caps(n, ()))) for n in order)

    def caps(self, n: Species, stack: tuple):
        if n in stack:
            return Var(self.var_of[n])
        stack = stack + (n,)
        items = frozenset(self.summand(entry, n, stack) for entry in self.incident[n])
        body = Sum(items)
        var = self.var_of[n]
        return Rec(var, body) if var in free_vars(body) else body

    def dress(self, n: Species, stack: tuple) -> Species:
        match n.body:
            case Elementary():
                body = n.body
            case NonCovalent(l, r):
                body = NonCovalent(self.dress(l, stack), self.dress(r, stack))
            case CovalentBond(l, r):
                body = CovalentBond(self.dress(l, stack), self.dress(r, stack))
            case CovalentMod(q, s):
                body = CovalentMod(q, self.dress(s, stack))
        return Species(self.caps(n, stack), body)

    def summand(self, entry, n: Species, stack: tuple) -> Basic:
        r, partner, product = entry
        match r.kind:
            case "ncb":
                op = NonCovBind(partner, self.caps(product, stack))
            case "cb":
                op = CovBind(partner, self.caps(product, stack))
            case "mod":
                op = CovMod(r.modtype, self.caps(r.product_names()[0], stack))
            case "cleave":
                op = Cleave(r.participants[1])
            case "conv" | "prod":
                ms = tuple(self.dress(p, stack) for p, k in r.products for _ in range(k))
                op = Convert(Process(ms)) if r.kind == "conv" else Produce(Process(ms))
            case "degrade":
                op = Convert(Process())
        return Basic(op, r.promoters, r.inhibitors)


def compile_table(spec: DiagramSpec) -> SpeciesTable:
    """One closed capability per species name reachable in the diagram."""
    return _Compiler(spec).run()


def instantiate(table: SpeciesTable, counts: dict) -> Process:
    """Parallel composition of ``counts[n]`` molecules of each name ``n``."""
    ms = []
    for n, k in counts.items():
        if isinstance(n, str):
            n = parse_name(n)
        if k < 0:
            raise DiagramError("counts must be non-negative")
        if canonical_name(n) not in table:
            raise DiagramError(f"unknown species {render_name(n)}")
        ms.extend([table.species(n)] * k)
    return canonicalize(Process(tuple(ms)))


# -- random diagrams -------------------------------------------------------

_LETTERS = "ABCDE"


def random_diagram(rng: random.Random, max_species: int = 5, max_caps: int = 3, max_count: int = 3) -> DiagramSpec:
    """A random well-formed diagram.

    At most ``max_species`` elementary species, at most ``max_caps``
    reactions incident to any name, conversions may point back at earlier
    species (creating recursive capabilities).
    """
    n = rng.randint(1, max_species)
    base = [elem(c) for c in _LETTERS[:n]]
    known = list(base)
    load = {}
    reactions = []

    def room(*names):
        return all(load.get(x, 0) < max_caps for x in names)

    def shallow(x):
        return _depth(x) <= 2

    def contingencies():
        nu = iota = frozenset()
        if rng.random() < 0.2:
            nu = frozenset([rng.choice(known)])
        if rng.random() < 0.2:
            iota = frozenset([rng.choice(known)])
        return nu, iota

    for _ in range(rng.randint(1, 2 * n + 1)):
        kind = rng.choice(["ncb", "ncb", "cb", "mod", "cleave", "conv", "prod", "degrade"])
        candidates = [x for x in known if shallow(x)]
        a = rng.choice(candidates)
        nu, iota = contingencies()
        if kind in ("ncb", "cb"):
            b = rng.choice(candidates)
            if not room(a, b):
                continue
            r = Reaction(kind, (a, b), nu, iota)
            load[a] = load.get(a, 0) + 1
            if b != a:
                load[b] = load.get(b, 0) + 1
        elif kind == "cleave":
            targets = [x for x in known if isinstance(x.body, (CovalentBond, CovalentMod))]
            if not targets or not room(a):
                continue
            r = Reaction(kind, (a, rng.choice(targets)), nu, iota)
            load[a] = load.get(a, 0) + 1
        else:
            if not room(a):
                continue
            if kind == "mod":
                r = Reaction(kind, (a,), nu, iota, modtype=rng.choice("pu"))
            elif kind == "degrade":
                r = Reaction(kind, (a,), nu, iota)
            else:
                prods = rng.sample(known, k=min(len(known), rng.randint(1, 2)))
                r = Reaction(kind, (a,), nu, iota, tuple((p, rng.randint(1, 2)) for p in prods))
            load[a] = load.get(a, 0) + 1
        if r in reactions:
            continue
        reactions.append(r)
        for p in r.product_names():
            if p not in known:
                known.append(p)
    species = tuple(SpeciesDecl(b, "elementary", rng.randint(0, max_count)) for b in base)
    if not any(s.count for s in species):
        species = (SpeciesDecl(base[0], "elementary", 1),) + species[1:]
    spec = DiagramSpec(species, tuple(reactions))
    spec.validate()
    return spec


def _depth(n: Species) -> int:
    match n.body:
        case Elementary():
            return 0
        case NonCovalent(l, r) | CovalentBond(l, r):
            return 1 + max(_depth(l), _depth(r))
        case CovalentMod(_, s):
            return 1 + _depth(s)
