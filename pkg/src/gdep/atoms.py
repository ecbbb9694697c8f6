"""Dependence atoms, their textual syntax, and single-antecedent normalization.

Textual syntax (both kinds share it)::

    gdep(x0 x1 ; y0)     G-dependence: y0 G-depends on {x0, x1}
    dep(Title ; Salary)  functional dependence

Sides are sets; repeated names collapse, either side may be empty.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import FormatError, ParseError
from .team import fmt_vars, is_variable_name


class _Atom:
    kind = ""
    __slots__ = ()

    def __post_init__(self):
        if type(self.lhs) is not frozenset:
            object.__setattr__(self, "lhs", frozenset(self.lhs))
        if type(self.rhs) is not frozenset:
            object.__setattr__(self, "rhs", frozenset(self.rhs))

    @property
    def variables(self) -> frozenset[str]:
        return self.lhs | self.rhs

    def sort_key(self):
        return (self.kind, tuple(sorted(self.lhs)), tuple(sorted(self.rhs)))

    def __str__(self):
        return f"{self.kind}({fmt_vars(self.lhs)} ; {fmt_vars(self.rhs)})"


@dataclass(frozen=True)
class GAtom(_Atom):
    """G-dependence atom: rows differing on exactly one lhs variable differ on rhs."""
    lhs: frozenset
    rhs: frozenset
    kind = "gdep"

    @property
    def is_single(self) -> bool:
        return len(self.lhs) == 1

    @property
    def antecedent(self) -> str:
        """The lhs variable of a single-antecedent atom."""
        (v,) = self.lhs
        return v


@dataclass(frozen=True)
class FAtom(_Atom):
    """Functional dependence atom dep(lhs, rhs)."""
    lhs: frozenset
    rhs: frozenset
    kind = "dep"


Atom = Union[GAtom, FAtom]
AtomSet = frozenset  # of GAtom


def gatom(lhs: Iterable[str] | str, rhs: Iterable[str] | str) -> GAtom:
    """Convenience constructor; a plain string is split on whitespace."""
    if isinstance(lhs, str):
        lhs = lhs.split()
    if isinstance(rhs, str):
        rhs = rhs.split()
    return GAtom(frozenset(lhs), frozenset(rhs))


def sorted_atoms(atoms: Iterable[Atom]) -> list:
    return sorted(atoms, key=lambda a: a.sort_key())


def variables_of(atoms: Iterable[Atom]) -> frozenset[str]:
    out: set[str] = set()
    for a in atoms:
        out |= a.lhs
        out |= a.rhs
    return frozenset(out)


# -- parsing -------------------------------------------------------------------

_ATOM_RE = re.compile(r"\s*(gdep|dep)\s*\(([^;()]*);([^;()]*)\)\s*$")
_HEAD_RE = re.compile(r"\s*(gdep|dep)\s*\(")


def parse_atom(text: str) -> Atom:
    head = _HEAD_RE.match(text)
    if not head:
        pos = len(text) - len(text.lstrip())
        raise ParseError("expected 'gdep(' or 'dep('", pos)
    m = _ATOM_RE.match(text)
    if not m:
        inner = text[head.end():]
        semi = inner.find(";")
        close = inner.find(")")
        if semi < 0 or (0 <= close < semi):
            raise ParseError("expected ';' separating the two sides",
                             head.end() + (close if close >= 0 else len(inner)))
        rest = inner[semi + 1:]
        close = rest.find(")")
        if close < 0:
            raise ParseError("expected ')'", len(text))
        bad = head.end() + semi + 1 + close + 1
        if rest[close + 1:].strip():
            raise ParseError("unexpected trailing input", bad)
        raise ParseError("malformed atom", head.end())
    cls = GAtom if m.group(1) == "gdep" else FAtom
    sides = []
    for g in (2, 3):
        names = m.group(g).split()
        for name in names:
            if not is_variable_name(name):
                raise ParseError(f"invalid variable name {name!r}",
                                 m.start(g) + m.group(g).find(name))
        sides.append(frozenset(names))
    return cls(sides[0], sides[1])


def parse_gatom(text: str) -> GAtom:
    atom = parse_atom(text)
    if not isinstance(atom, GAtom):
        raise ParseError("expected a G-dependence atom 'gdep(... ; ...)'", 0)
    return atom


def load_atoms(source) -> list:
    """Parse an atom file: one atom per line, '#' comment lines, blanks ignored."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    atoms = []
    for lineno, line in enumerate(source.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            atoms.append(parse_atom(s))
        except ParseError as e:
            raise FormatError(f"line {lineno}: {e}") from None
    return atoms


def read_atoms(path) -> list:
    with open(path, "rb") as fh:
        return load_atoms(fh)


def format_atoms(atoms: Iterable[Atom]) -> str:
    return "".join(f"{a}\n" for a in sorted_atoms(atoms))


# -- normalization -------------------------------------------------------------

def normalize(sigma: GAtom) -> AtomSet:
    """Split gdep(x, y) into the equivalent single-antecedent atoms
    gdep(xi, (x - xi) y).  An empty lhs is valid and yields nothing."""
    x, y = sigma.lhs, sigma.rhs
    if len(x) == 1:
        return frozenset((sigma,))
    return frozenset(GAtom(frozenset((xi,)), (x - {xi}) | y) for xi in x)


def normalize_set(sigma: Iterable[GAtom]) -> AtomSet:
    out: set[GAtom] = set()
    for s in sigma:
        out |= normalize(s)
    return frozenset(out)
