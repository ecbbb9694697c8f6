"""Rewriting between functional dependence and G-dependence.

    dep(x, y)   holds iff  gdep(yi, x)            holds for every yi in y
    gdep(x, y)  holds iff  dep((x - xi) y, xi)    holds for every xi in x

Both directions lift to formulas by replacing each atom with the
conjunction of its translation.
"""

from __future__ import annotations

from typing import Literal, Optional

from .atoms import FAtom, GAtom, sorted_atoms
from .logic.syntax import (And, EqLiteral, Exists, Forall, Or, RelLiteral,
                           all_vars, free_vars)

Direction = Literal["to_gdep", "to_fdep"]


def fdep_to_gdeps(delta: FAtom) -> frozenset:
    return frozenset(GAtom(frozenset((yi,)), delta.lhs) for yi in delta.rhs)


def gdep_to_fdeps(sigma: GAtom) -> frozenset:
    return frozenset(FAtom((sigma.lhs - {xi}) | sigma.rhs, frozenset((xi,)))
                     for xi in sigma.lhs)


def translate_atom(atom, direction: Direction) -> frozenset:
    """The atom set equivalent to atom in the target kind; atoms already of
    the target kind are returned unchanged as a singleton."""
    if direction == "to_gdep":
        return fdep_to_gdeps(atom) if isinstance(atom, FAtom) else frozenset((atom,))
    if direction == "to_fdep":
        return gdep_to_fdeps(atom) if isinstance(atom, GAtom) else frozenset((atom,))
    raise ValueError(f"unknown direction {direction!r}")


def _conjoin(parts: list):
    phi = parts[0]
    for p in parts[1:]:
        phi = And(phi, p)
    return phi


def _tautology(atom, scope: tuple, fallback: frozenset):
    """An always-true identity literal over a variable that is in scope."""
    names = sorted(atom.lhs | atom.rhs) or list(reversed(scope)) or sorted(fallback)
    if names:
        v = names[0]
        return EqLiteral(True, v, v)
    return None


def rewrite_formula(phi, direction: Direction):
    """Replace every dependence atom of the source kind by its translation.

    An atom whose translation is empty is valid: it is dropped from a
    surrounding conjunction, and otherwise replaced by ``v = v`` for some
    variable in scope.  A formula left with nothing in scope at all becomes
    the closed tautology ``A v. v = v``.
    """
    if direction not in ("to_gdep", "to_fdep"):
        raise ValueError(f"unknown direction {direction!r}")
    free = free_vars(phi)

    def rw(f, scope: tuple) -> Optional[object]:
        # None marks a valid subformula that may be dropped from a conjunction
        if isinstance(f, (RelLiteral, EqLiteral)):
            return f
        if isinstance(f, (GAtom, FAtom)):
            parts = sorted_atoms(translate_atom(f, direction))
            if parts:
                return _conjoin(parts)
            return None
        if isinstance(f, And):
            left, right = rw(f.left, scope), rw(f.right, scope)
            if left is None:
                return right
            if right is None:
                return left
            return And(left, right)
        if isinstance(f, Or):
            return Or(filled(f.left, scope), filled(f.right, scope))
        if isinstance(f, (Exists, Forall)):
            return type(f)(f.var, filled(f.body, scope + (f.var,)))
        raise TypeError(f"not a formula: {f!r}")

    def filled(f, scope: tuple):
        out = rw(f, scope)
        if out is not None:
            return out
        for sub in _first_atom(f):
            taut = _tautology(sub, scope, free)
            if taut is not None:
                return taut
        return _closed_tautology(phi)

    return filled(phi, ())


def _first_atom(f):
    """Dependence atoms of f in left-to-right order."""
    if isinstance(f, (GAtom, FAtom)):
        yield f
    elif isinstance(f, (And, Or)):
        yield from _first_atom(f.left)
        yield from _first_atom(f.right)
    elif isinstance(f, (Exists, Forall)):
        yield from _first_atom(f.body)


def _closed_tautology(phi):
    names = sorted(all_vars(phi))
    v = names[0] if names else "v"
    return Forall(v, EqLiteral(True, v, v))
