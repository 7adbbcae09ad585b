"""Transition labels.

Bond creation, bond dissociation and covalent binding are symmetric: the
compounds they build or break are commutative, so ``ncb(A,B)`` and
``ncb(B,A)`` denote the same action.  They print in the orientation they
were built with; ``sorted_pair`` gives the orientation used in transition
lists.
"""
from __future__ import annotations

from dataclasses import dataclass

from .congruence import render_name
from .terms import Name


class _Pair:
    """Unordered pair of names; equality ignores orientation."""

    __slots__ = ()

    def _key(self):
        return (type(self).__name__, frozenset((self.left, self.right)))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def sorted_pair(self):
        """Same action with its names in printed order."""
        if render_name(self.left) <= render_name(self.right):
            return self
        return type(self)(self.right, self.left)


@dataclass(frozen=True, eq=False)
class NcBond(_Pair):
    left: Name
    right: Name

    def __str__(self):
        return f"ncb({render_name(self.left)},{render_name(self.right)})"


@dataclass(frozen=True, eq=False)
class NcUnbond(_Pair):
    left: Name
    right: Name

    def __str__(self):
        return f"ncu({render_name(self.left)},{render_name(self.right)})"


@dataclass(frozen=True, eq=False)
class CovBond(_Pair):
    left: Name
    right: Name

    def __str__(self):
        return f"cb({render_name(self.left)},{render_name(self.right)})"


def _name_set(names) -> str:
    return "{" + ",".join(sorted(map(render_name, names))) + "}"


@dataclass(frozen=True)
class Conversion:
    reactant: Name
    products: frozenset

    def __str__(self):
        return f"conv({render_name(self.reactant)},{_name_set(self.products)})"


@dataclass(frozen=True)
class Production:
    reactant: Name
    products: frozenset

    def __str__(self):
        return f"prod({render_name(self.reactant)},{_name_set(self.products)})"


@dataclass(frozen=True)
class CleaveBond:
    cleaver: Name
    bond: Name

    def __str__(self):
        return f"clvb({render_name(self.cleaver)},{render_name(self.bond)})"


@dataclass(frozen=True)
class Modification:
    modtype: str
    target: Name

    def __str__(self):
        return f"mod('{self.modtype},{render_name(self.target)})"


@dataclass(frozen=True)
class CleaveMod:
    cleaver: Name
    mod: Name

    def __str__(self):
        return f"clvm({render_name(self.cleaver)},{render_name(self.mod)})"


Action = NcBond | NcUnbond | Conversion | Production | CovBond | CleaveBond | Modification | CleaveMod


def print_action(a) -> str:
    """ASCII serialization of a transition label."""
    return str(a)
