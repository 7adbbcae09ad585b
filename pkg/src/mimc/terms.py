"""Term algebra of the MIM calculus.

Processes are flat parallel compositions of species.  A species pairs a
capability with an inner structure (elementary, non-covalent compound,
covalent modification or covalent bond).  Capabilities are recursive
(``rec x. mu``), variables, or sums of basic capabilities.

All terms are immutable and hash-consed: building a term equal to an existing
one returns the existing object, so equality is identity and the many caches
keyed on terms stay cheap.
"""
from __future__ import annotations

import itertools
import weakref
from dataclasses import dataclass, fields
from functools import lru_cache
from typing import Union


class TermError(ValueError):
    """Base class for ill-formed terms."""


class FreeVariableError(TermError):
    pass


class ContractivityError(TermError):
    pass


class CleaveTargetError(TermError):
    pass


class _Interned(type):
    """Hash-consing: structurally equal terms are the same object."""

    _table = weakref.WeakValueDictionary()

    def __call__(cls, *args, **kwargs):
        obj = super().__call__(*args, **kwargs)
        key = (cls,) + tuple(obj.__dict__[n] for n in cls._field_names)
        try:
            return _Interned._table[key]
        except KeyError:
            _Interned._table[key] = obj
            return obj


class _Term(metaclass=_Interned):
    _field_names = ()


def _term(cls):
    cls = dataclass(frozen=True)(cls)
    names = tuple(f.name for f in fields(cls))
    cls._field_names = names
    tag = cls.__name__

    def __hash__(self):
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = hash((tag,) + tuple(getattr(self, n) for n in names))
            object.__setattr__(self, "_hash", h)
            return h

    def __eq__(self, other):
        # interned, so equal terms are identical
        if other.__class__ is not self.__class__:
            return NotImplemented
        return self is other

    def __reduce__(self):
        return (cls, tuple(getattr(self, n) for n in names))

    cls.__hash__ = __hash__
    cls.__eq__ = __eq__
    cls.__reduce__ = __reduce__
    return cls


# -- inner species ---------------------------------------------------------

@_term
class Elementary(_Term):
    name: str


@_term
class NonCovalent(_Term):
    left: Species
    right: Species


@_term
class CovalentMod(_Term):
    modtype: str
    species: Species


@_term
class CovalentBond(_Term):
    left: Species
    right: Species


Inner = Union[Elementary, NonCovalent, CovalentMod, CovalentBond]


@_term
class Species(_Term):
    caps: Capability
    body: Inner


# A name is a species whose capabilities are all empty.
Name = Species


# -- capabilities ----------------------------------------------------------

@_term
class Var(_Term):
    name: str


@_term
class Rec(_Term):
    var: str
    body: Capability

    def __post_init__(self):
        # rec x. rec y. x and friends have no denotation
        bound = {self.var}
        c = self.body
        while isinstance(c, Rec):
            bound.add(c.var)
            c = c.body
        if isinstance(c, Var) and c.name in bound:
            raise ContractivityError(f"non-contractive recursion on variable {c.name!r}")


@_term
class Sum(_Term):
    items: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.items, frozenset):
            object.__setattr__(self, "items", frozenset(self.items))


Capability = Union[Rec, Var, Sum]
EMPTY = Sum()


@_term
class NonCovBind(_Term):
    partner: Name
    cont: Capability


@_term
class CovBind(_Term):
    partner: Name
    cont: Capability


@_term
class CovMod(_Term):
    modtype: str
    cont: Capability


@_term
class Cleave(_Term):
    target: Name

    def __post_init__(self):
        if not isinstance(self.target.body, (CovalentBond, CovalentMod)):
            raise CleaveTargetError("cleave target must be a covalent bond or modification")


@_term
class Convert(_Term):
    products: Process


@_term
class Produce(_Term):
    products: Process


Op = Union[NonCovBind, CovBind, CovMod, Cleave, Convert, Produce]


@_term
class Basic(_Term):
    op: Op
    promoters: frozenset = frozenset()
    inhibitors: frozenset = frozenset()

    def __post_init__(self):
        for attr in ("promoters", "inhibitors"):
            v = getattr(self, attr)
            if not isinstance(v, frozenset):
                object.__setattr__(self, attr, frozenset(v))


@_term
class Process(_Term):
    molecules: tuple = ()

    def __post_init__(self):
        if not isinstance(self.molecules, tuple):
            object.__setattr__(self, "molecules", tuple(self.molecules))

    def __iter__(self):
        return iter(self.molecules)

    def __len__(self):
        return len(self.molecules)

    def __or__(self, other):
        if isinstance(other, Species):
            return Process(self.molecules + (other,))
        return Process(self.molecules + other.molecules)


NIL = Process()


# -- convenience constructors ----------------------------------------------

def elem(name: str, caps: Capability = EMPTY) -> Species:
    return Species(caps, Elementary(name))


def complex_of(left: Species, right: Species, caps: Capability = EMPTY) -> Species:
    return Species(caps, NonCovalent(left, right))


def bond_of(left: Species, right: Species, caps: Capability = EMPTY) -> Species:
    return Species(caps, CovalentBond(left, right))


def mod_of(modtype: str, species: Species, caps: Capability = EMPTY) -> Species:
    return Species(caps, CovalentMod(modtype, species))


def caps(*summands) -> Sum:
    """Build a sum; bare ops are wrapped with empty contingencies."""
    return Sum(frozenset(s if isinstance(s, Basic) else Basic(s) for s in summands))


def par(*species: Species) -> Process:
    return Process(tuple(species))


# -- free variables and substitution ---------------------------------------

@lru_cache(maxsize=1 << 16)
def free_vars(t) -> frozenset:
    """Free capability variables of any term."""
    match t:
        case Var(name):
            return frozenset((name,))
        case Rec(var, body):
            return free_vars(body) - {var}
        case Sum(items):
            return frozenset().union(*map(free_vars, items))
        case Basic(op, _, _):
            return free_vars(op)
        case NonCovBind(_, cont) | CovBind(_, cont) | CovMod(_, cont):
            return free_vars(cont)
        case Cleave():
            return frozenset()
        case Convert(products) | Produce(products):
            return free_vars(products)
        case Process(molecules):
            return frozenset().union(*map(free_vars, molecules))
        case Species(c, body):
            return free_vars(c) | free_vars(body)
        case Elementary():
            return frozenset()
        case NonCovalent(left, right) | CovalentBond(left, right):
            return free_vars(left) | free_vars(right)
        case CovalentMod(_, s):
            return free_vars(s)
    raise TypeError(f"not a term: {t!r}")


def is_closed(t) -> bool:
    return not free_vars(t)


def _fresh(base: str, avoid) -> str:
    for i in itertools.count(1):
        cand = f"{base}_{i}"
        if cand not in avoid:
            return cand


def substitute(body, var: str, repl: Capability):
    """Capture-avoiding ``body[repl/var]``.

    Works on every syntactic category; processes carried by conversion and
    production are traversed as well.
    """
    if var not in free_vars(body):
        return body
    return _subst(body, var, repl, free_vars(repl))


def _subst(t, var, repl, repl_fv):
    if var not in free_vars(t):
        return t
    match t:
        case Var(name):
            return repl if name == var else t
        case Rec(v, b):
            if v in repl_fv:
                nv = _fresh(v, repl_fv | free_vars(b) | {var})
                b = _subst(b, v, Var(nv), frozenset((nv,)))
                v = nv
            return Rec(v, _subst(b, var, repl, repl_fv))
        case Sum(items):
            return Sum(frozenset(_subst(i, var, repl, repl_fv) for i in items))
        case Basic(op, nu, iota):
            return Basic(_subst(op, var, repl, repl_fv), nu, iota)
        case NonCovBind(p, c):
            return NonCovBind(p, _subst(c, var, repl, repl_fv))
        case CovBind(p, c):
            return CovBind(p, _subst(c, var, repl, repl_fv))
        case CovMod(q, c):
            return CovMod(q, _subst(c, var, repl, repl_fv))
        case Convert(p):
            return Convert(_subst(p, var, repl, repl_fv))
        case Produce(p):
            return Produce(_subst(p, var, repl, repl_fv))
        case Process(ms):
            return Process(tuple(_subst(m, var, repl, repl_fv) for m in ms))
        case Species(c, b):
            return Species(_subst(c, var, repl, repl_fv), _subst(b, var, repl, repl_fv))
        case NonCovalent(l, r):
            return NonCovalent(_subst(l, var, repl, repl_fv), _subst(r, var, repl, repl_fv))
        case CovalentBond(l, r):
            return CovalentBond(_subst(l, var, repl, repl_fv), _subst(r, var, repl, repl_fv))
        case CovalentMod(q, s):
            return CovalentMod(q, _subst(s, var, repl, repl_fv))
    raise TypeError(f"not a term: {t!r}")


def unfold(c: Rec) -> Capability:
    """One-step unfolding ``mu[rec x.mu / x]``."""
    return substitute(c.body, c.var, c)


@lru_cache(maxsize=1 << 16)
def summands(c: Capability) -> frozenset:
    """Summands of ``c`` after unfolding any leading rec binders."""
    while isinstance(c, Rec):
        c = unfold(c)
    if isinstance(c, Var):
        raise FreeVariableError(f"free capability variable {c.name!r}")
    return c.items
