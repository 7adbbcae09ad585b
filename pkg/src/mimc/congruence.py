"""Structural congruence: canonical forms, stripping and equality.

``canonicalize`` handles parallel composition (order, units), compound
commutativity, sums as sets, and alpha-renaming of rec binders.  Binders are
renamed ``x1, x2, ...`` after their nesting depth, so alpha-equivalent
capabilities at the same depth render identically.  The canonical text of a
term doubles as its sort key.

Closed terms are further minimized: their syntax is turned into a finite
graph (variables point back at their binder), the coarsest bisimulation is
computed, and the quotient is read back as a term.  Congruent terms, rec
unfoldings included, thus share one canonical form and equality is identity
of canonical forms.
"""
from __future__ import annotations

from functools import lru_cache

from .terms import (
    EMPTY,
    Basic,
    Capability,
    Cleave,
    CovalentBond,
    CovalentMod,
    CovBind,
    CovMod,
    Convert,
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
    Var,
    free_vars,
)

_CACHE = 1 << 16


# -- rendering -------------------------------------------------------------

@lru_cache(maxsize=_CACHE)
def render_name(n: Species) -> str:
    match n.body:
        case Elementary(name):
            return name
        case NonCovalent(l, r):
            return f"({render_name(l)}:{render_name(r)})"
        case CovalentBond(l, r):
            return f"[{render_name(l)} {render_name(r)}]"
        case CovalentMod(q, s):
            return f"['{q} {render_name(s)}]"


def _names(ns) -> str:
    return ",".join(sorted(render_name(n) for n in ns))


@lru_cache(maxsize=_CACHE)
def render_basic(b: Basic) -> str:
    prefix = ""
    if b.promoters or b.inhibitors:
        prefix = f"[+{_names(b.promoters)};-{_names(b.inhibitors)}]"
    match b.op:
        case NonCovBind(p, c):
            body = f"bind({render_name(p)}){render_caps(c)}"
        case CovBind(p, c):
            body = f"cbind({render_name(p)}){render_caps(c)}"
        case CovMod(q, c):
            body = f"mod('{q}){render_caps(c)}"
        case Cleave(t):
            body = f"cleave({render_name(t)})"
        case Convert(p):
            body = f"conv({render_process(p)})"
        case Produce(p):
            body = f"prod({render_process(p)})"
    return prefix + body


@lru_cache(maxsize=_CACHE)
def render_caps(c: Capability) -> str:
    match c:
        case Var(name):
            return name
        case Rec(var, body):
            return f"rec {var}.{render_caps(body)}"
        case Sum(items):
            return "{" + " + ".join(sorted(map(render_basic, items))) + "}"


@lru_cache(maxsize=_CACHE)
def render_species(s: Species) -> str:
    match s.body:
        case Elementary(name):
            inner = name
        case NonCovalent(l, r):
            inner = f"({render_species(l)}:{render_species(r)})"
        case CovalentBond(l, r):
            inner = f"[{render_species(l)} {render_species(r)}]"
        case CovalentMod(q, sp):
            inner = f"['{q} {render_species(sp)}]"
    return f"{render_caps(s.caps)}.{inner}"


@lru_cache(maxsize=_CACHE)
def render_process(p: Process) -> str:
    if not p.molecules:
        return "0"
    return " | ".join(map(render_species, p.molecules))


# -- canonical forms -------------------------------------------------------

def _bind(env: tuple, old: str, new: str) -> tuple:
    return tuple((o, n) for o, n in env if o != old) + ((old, new),)


@lru_cache(maxsize=_CACHE)
def _canon_caps(c: Capability, level: int, env: tuple) -> Capability:
    match c:
        case Var(name):
            for old, new in env:
                if old == name:
                    return Var(new)
            return c
        case Rec(var, body):
            new = f"x{level + 1}"
            return Rec(new, _canon_caps(body, level + 1, _bind(env, var, new)))
        case Sum(items):
            return Sum(frozenset(_canon_basic(b, level, env) for b in items))


def _canon_basic(b: Basic, level: int, env: tuple) -> Basic:
    nu = frozenset(map(canonical_name, b.promoters))
    iota = frozenset(map(canonical_name, b.inhibitors))
    match b.op:
        case NonCovBind(p, c):
            op = NonCovBind(canonical_name(p), _canon_caps(c, level, env))
        case CovBind(p, c):
            op = CovBind(canonical_name(p), _canon_caps(c, level, env))
        case CovMod(q, c):
            op = CovMod(q, _canon_caps(c, level, env))
        case Cleave(t):
            op = Cleave(canonical_name(t))
        case Convert(p):
            op = Convert(_canon_process(p, level, env))
        case Produce(p):
            op = Produce(_canon_process(p, level, env))
    return Basic(op, nu, iota)


@lru_cache(maxsize=_CACHE)
def _canon_species(s: Species, level: int, env: tuple) -> Species:
    c = _canon_caps(s.caps, level, env)
    match s.body:
        case Elementary():
            body = s.body
        case NonCovalent(l, r):
            l, r = sorted((_canon_species(l, level, env), _canon_species(r, level, env)), key=render_species)
            body = NonCovalent(l, r)
        case CovalentBond(l, r):
            l, r = sorted((_canon_species(l, level, env), _canon_species(r, level, env)), key=render_species)
            body = CovalentBond(l, r)
        case CovalentMod(q, sp):
            body = CovalentMod(q, _canon_species(sp, level, env))
    return Species(c, body)


def _canon_process(p: Process, level: int, env: tuple) -> Process:
    ms = (_canon_species(m, level, env) for m in p.molecules)
    return Process(tuple(sorted(ms, key=render_species)))


def _syntactic_species(s: Species) -> Species:
    return _canon_species(s, 0, ())


@lru_cache(maxsize=_CACHE)
def canonical_species(s: Species) -> Species:
    """Canonical representative of the congruence class of ``s``.

    Closed species are minimized: the bisimulation quotient of their graph is
    read back as a term, binding a rec exactly where a path revisits a class.
    Open species only get the syntactic normalization.
    """
    if free_vars(s):
        return _syntactic_species(s)
    s = _syntactic_species(s)
    return _syntactic_species(_minimal(lambda g: g.species(s, {})))


@lru_cache(maxsize=_CACHE)
def canonical_caps(c: Capability) -> Capability:
    if free_vars(c):
        return _canon_caps(c, 0, ())
    c = _canon_caps(c, 0, ())
    return _canon_caps(_minimal(lambda g: g.caps(c, {})), 0, ())


@lru_cache(maxsize=_CACHE)
def canonicalize(p: Process) -> Process:
    """Unique representative of ``p`` up to structural congruence.

    Parallel composition is a multiset, so molecules are normalized one by
    one and sorted by their printed form.
    """
    ms = (canonical_species(m) for m in p.molecules)
    return Process(tuple(sorted(ms, key=render_species)))


def _blank(s: Species) -> Species:
    match s.body:
        case Elementary():
            body = s.body
        case NonCovalent(l, r):
            body = NonCovalent(_blank(l), _blank(r))
        case CovalentBond(l, r):
            body = CovalentBond(_blank(l), _blank(r))
        case CovalentMod(q, sp):
            body = CovalentMod(q, _blank(sp))
    return Species(EMPTY, body)


@lru_cache(maxsize=_CACHE)
def canonical_name(s: Species) -> Name:
    """Strip without the closedness check (names never carry variables)."""
    return _canon_species(_blank(s), 0, ())


def strip_species(s: Species) -> Name:
    """The name of ``s``: every capability replaced by the empty one."""
    fv = free_vars(s)
    if fv:
        raise FreeVariableError(f"free capability variables {sorted(fv)}")
    return canonical_name(s)


def strip_process(p: Process) -> frozenset:
    """Set of names of the top-level molecules of ``p``."""
    return frozenset(strip_species(m) for m in p.molecules)


# -- bisimulation ----------------------------------------------------------

_SET, _MULTI, _SEQ = 0, 1, 2


class _Graph:
    """Finite graph of a family of closed terms.

    Every node carries a label and children combined either as a set (sum
    summands), a multiset (parallel molecules, compound children) or a
    sequence.  Rec binders become back edges, so the graph is the finite
    presentation of the regular tree a term denotes.
    """

    def __init__(self):
        self.labels = []
        self.modes = []
        self.children = []

    def _node(self, label, mode):
        self.labels.append(label)
        self.modes.append(mode)
        self.children.append([])
        return len(self.labels) - 1

    def caps(self, c: Capability, env: dict) -> int:
        bound = []
        while isinstance(c, Rec):
            bound.append(c.var)
            c = c.body
        if isinstance(c, Var):
            try:
                return env[c.name]
            except KeyError:
                raise FreeVariableError(f"free capability variable {c.name!r}") from None
        node = self._node(("sum",), _SET)
        if bound:
            env = dict(env)
            for v in bound:
                env[v] = node
        self.children[node] = [self.basic(b, env) for b in c.items]
        return node

    def basic(self, b: Basic, env: dict) -> int:
        match b.op:
            case NonCovBind(p, c):
                label, kids = ("bind", p), [self.caps(c, env)]
            case CovBind(p, c):
                label, kids = ("cbind", p), [self.caps(c, env)]
            case CovMod(q, c):
                label, kids = ("mod", q), [self.caps(c, env)]
            case Cleave(t):
                label, kids = ("cleave", t), []
            case Convert(p):
                label, kids = ("conv",), [self.process(p, env)]
            case Produce(p):
                label, kids = ("prod",), [self.process(p, env)]
        node = self._node(label + (b.promoters, b.inhibitors), _SEQ)
        self.children[node] = kids
        return node

    def process(self, p: Process, env: dict) -> int:
        node = self._node(("par",), _MULTI)
        self.children[node] = [self.species(m, env) for m in p.molecules]
        return node

    def species(self, s: Species, env: dict) -> int:
        node = self._node(("sp",), _SEQ)
        self.children[node] = [self.caps(s.caps, env), self.inner(s.body, env)]
        return node

    def inner(self, body, env: dict) -> int:
        match body:
            case Elementary(name):
                return self._node(("elem", name), _SEQ)
            case NonCovalent(l, r):
                node = self._node(("nc",), _MULTI)
                self.children[node] = [self.species(l, env), self.species(r, env)]
            case CovalentBond(l, r):
                node = self._node(("cb",), _MULTI)
                self.children[node] = [self.species(l, env), self.species(r, env)]
            case CovalentMod(q, sp):
                node = self._node(("cm", q), _SEQ)
                self.children[node] = [self.species(sp, env)]
        return node

    def classes(self) -> list:
        """Coarsest stable partition (naive iterated refinement)."""
        ids = {}
        cls = [ids.setdefault(lab, len(ids)) for lab in self.labels]
        count = len(ids)
        while True:
            ids = {}
            new = []
            for i, kids in enumerate(self.children):
                ks = [cls[k] for k in kids]
                mode = self.modes[i]
                if mode == _SET:
                    key = frozenset(ks)
                elif mode == _MULTI:
                    key = tuple(sorted(ks))
                else:
                    key = tuple(ks)
                new.append(ids.setdefault((cls[i], key), len(ids)))
            cls = new
            if len(ids) == count:
                return cls
            count = len(ids)


def _minimal(build):
    g = _Graph()
    root = build(g)
    cls = g.classes()
    rep = {}
    for i, k in enumerate(cls):
        rep.setdefault(k, i)
    return _Readback(g, cls, rep).term(cls[root])[0]


class _Readback:
    """Turn a quotient graph back into a term.

    Classes are expanded as a tree.  A sum class met again on the current
    path becomes a variable and its first occurrence a rec binder.  Results
    without free variables are shared.
    """

    def __init__(self, g: _Graph, cls: list, rep: dict):
        self.g, self.cls, self.rep = g, cls, rep
        self.stack = set()
        self.memo = {}

    def kids(self, k: int) -> list:
        return [self.cls[j] for j in self.g.children[self.rep[k]]]

    def term(self, k: int):
        """Returns ``(term, free classes)``."""
        hit = self.memo.get(k)
        if hit is not None:
            return hit, frozenset()
        out, free = self._build(k)
        if not free:
            self.memo[k] = out
        return out, free

    def _build(self, k: int):
        lab = self.g.labels[self.rep[k]]
        kind = lab[0]
        kids = self.kids(k)
        if kind == "sum":
            var = f"v{k}"
            if k in self.stack:
                return Var(var), frozenset((k,))
            self.stack.add(k)
            items, free = [], frozenset()
            for j in sorted(set(kids)):
                t, f = self.term(j)
                items.append(t)
                free |= f
            self.stack.discard(k)
            body = Sum(frozenset(items))
            if k in free:
                return Rec(var, body), free - {k}
            return body, free
        parts = [self.term(j) for j in kids]
        free = frozenset().union(*(f for _, f in parts))
        ts = [t for t, _ in parts]
        match kind:
            case "bind":
                t = Basic(NonCovBind(lab[1], ts[0]), lab[2], lab[3])
            case "cbind":
                t = Basic(CovBind(lab[1], ts[0]), lab[2], lab[3])
            case "mod":
                t = Basic(CovMod(lab[1], ts[0]), lab[2], lab[3])
            case "cleave":
                t = Basic(Cleave(lab[1]), lab[2], lab[3])
            case "conv":
                t = Basic(Convert(ts[0]), lab[1], lab[2])
            case "prod":
                t = Basic(Produce(ts[0]), lab[1], lab[2])
            case "par":
                t = Process(tuple(ts))
            case "sp":
                t = Species(ts[0], ts[1])
            case "elem":
                t = Elementary(lab[1])
            case "nc":
                t = NonCovalent(ts[0], ts[1])
            case "cb":
                t = CovalentBond(ts[0], ts[1])
            case "cm":
                t = CovalentMod(lab[1], ts[0])
        return t, free


def bisimilar(a, b) -> bool:
    """Decide congruence of two closed terms of the same category directly on
    their joint graph.  Kept as an independent check of the canonical forms."""
    if type(a) is Process:
        a, b = _canon_process(a, 0, ()), _canon_process(b, 0, ())
    elif type(a) is Species:
        a, b = _syntactic_species(a), _syntactic_species(b)
    else:
        a, b = _canon_caps(a, 0, ()), _canon_caps(b, 0, ())
    g = _Graph()
    build = {Process: g.process, Species: g.species}.get(type(a), g.caps)
    ra, rb = build(a, {}), build(b, {})
    cls = g.classes()
    return cls[ra] == cls[rb]


def caps_equal(a: Capability, b: Capability) -> bool:
    """Structural congruence of closed capabilities, rec unfolding included."""
    return canonical_caps(a) == canonical_caps(b)


def species_equal(a: Species, b: Species) -> bool:
    return canonical_species(a) == canonical_species(b)


def process_equal(p: Process, q: Process) -> bool:
    """Structural congruence of closed processes."""
    return len(p.molecules) == len(q.molecules) and canonicalize(p) == canonicalize(q)


def caps_classes(items) -> list:
    """Class ids of closed capabilities, aligned with ``items``."""
    ids = {}
    return [ids.setdefault(canonical_caps(c), len(ids)) for c in items]
