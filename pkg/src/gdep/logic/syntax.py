"""Formulas of G-dependence logic and dependence logic, and their parser.

Grammar (``|`` binds looser than ``&``; quantifier bodies are units)::

    formula := disj
    disj    := conj ("|" conj)*
    conj    := unit ("&" unit)*
    unit    := "E" var "." unit | "A" var "." unit | "(" formula ")" | atom
    atom    := "~"? name "(" var ("," var)* ")" | var ("=" | "!=") var
             | "gdep(" var* ";" var* ")" | "dep(" var* ";" var* ")"

Negation is only allowed directly on relational and equality atoms.
Dependence atoms are the GAtom/FAtom values of ``gdep.atoms``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from ..atoms import FAtom, GAtom
from ..errors import ParseError

GDepAtom = GAtom
FDepAtom = FAtom


@dataclass(frozen=True)
class RelLiteral:
    positive: bool
    name: str
    args: tuple

    def __post_init__(self):
        if type(self.args) is not tuple:
            object.__setattr__(self, "args", tuple(self.args))

    def __str__(self):
        return f"{'' if self.positive else '~'}{self.name}({','.join(self.args)})"


@dataclass(frozen=True)
class EqLiteral:
    positive: bool
    left: str
    right: str

    def __str__(self):
        return f"{self.left} {'=' if self.positive else '!='} {self.right}"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"({self.left} & {self.right})"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"({self.left} | {self.right})"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"

    def __str__(self):
        return f"E {self.var}. {self.body}"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"

    def __str__(self):
        return f"A {self.var}. {self.body}"


Formula = Union[RelLiteral, EqLiteral, GAtom, FAtom, And, Or, Exists, Forall]
LITERALS = (RelLiteral, EqLiteral)
DEP_ATOMS = (GAtom, FAtom)


def free_vars(phi) -> frozenset[str]:
    if isinstance(phi, RelLiteral):
        return frozenset(phi.args)
    if isinstance(phi, EqLiteral):
        return frozenset((phi.left, phi.right))
    if isinstance(phi, DEP_ATOMS):
        return phi.lhs | phi.rhs
    if isinstance(phi, (And, Or)):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, (Exists, Forall)):
        return free_vars(phi.body) - {phi.var}
    raise TypeError(f"not a formula: {phi!r}")


def all_vars(phi) -> frozenset[str]:
    """Free and bound variable names occurring anywhere in phi."""
    if isinstance(phi, (Exists, Forall)):
        return all_vars(phi.body) | {phi.var}
    if isinstance(phi, (And, Or)):
        return all_vars(phi.left) | all_vars(phi.right)
    return free_vars(phi)


def subformulas(phi) -> Iterator:
    yield phi
    if isinstance(phi, (And, Or)):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)
    elif isinstance(phi, (Exists, Forall)):
        yield from subformulas(phi.body)


def depth(phi) -> int:
    """Connective nesting depth; atoms and literals have depth 0."""
    if isinstance(phi, (And, Or)):
        return 1 + max(depth(phi.left), depth(phi.right))
    if isinstance(phi, (Exists, Forall)):
        return 1 + depth(phi.body)
    return 0


def has_dependence_atoms(phi) -> bool:
    return any(isinstance(s, DEP_ATOMS) for s in subformulas(phi))


# -- parser --------------------------------------------------------------------

_TOKEN = re.compile(r"(!=|[(),;.&|=~])|([^\s;(),.&|=!~]+)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(1) if m.group(1) else m.start(2)
        if m.group(1):
            tokens.append(("op", m.group(1), start))
        else:
            tokens.append(("name", m.group(2), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def name(self, what: str = "variable") -> str:
        kind, val, pos = self.take()
        if kind != "name":
            raise ParseError(f"expected {what}, found {val or 'end of input'!r}", pos)
        return val

    def parse(self):
        phi = self.disj()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return phi

    def disj(self):
        phi = self.conj()
        while self.peek()[1] == "|" and self.peek()[0] == "op":
            self.take()
            phi = Or(phi, self.conj())
        return phi

    def conj(self):
        phi = self.unit()
        while self.peek()[1] == "&" and self.peek()[0] == "op":
            self.take()
            phi = And(phi, self.unit())
        return phi

    def _is_quantifier(self) -> bool:
        kind, val, _ = self.peek()
        return (kind == "name" and val in ("E", "A") and self.peek(1)[0] == "name"
                and self.peek(2)[1] == ".")

    def unit(self):
        kind, val, pos = self.peek()
        if self._is_quantifier():
            self.take()
            var = self.name()
            self.expect(".")
            body = self.unit()
            return Exists(var, body) if val == "E" else Forall(var, body)
        if kind == "op" and val == "(":
            self.take()
            phi = self.disj()
            self.expect(")")
            return phi
        return self.atom()

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "~":
            self.take()
            nkind, nval, npos = self.peek()
            if nkind == "op" and nval == "~":
                raise ParseError("double negation is not allowed", npos)
            if (nkind == "op" and nval == "(") or self._is_quantifier() \
                    or (nkind == "name" and nval in ("gdep", "dep")
                        and self.peek(1)[1] == "("):
                raise ParseError("negation only on literals", pos)
            lit = self.atom()
            if isinstance(lit, RelLiteral):
                return RelLiteral(not lit.positive, lit.name, lit.args)
            if isinstance(lit, EqLiteral):
                return EqLiteral(not lit.positive, lit.left, lit.right)
            raise ParseError("negation only on literals", pos)
        head = self.name("atom")
        nxt = self.peek()
        if nxt[0] == "op" and nxt[1] == "(":
            self.take()
            if head in ("gdep", "dep"):
                lhs, rhs = [], []
                while self.peek()[0] == "name":
                    lhs.append(self.take()[1])
                self.expect(";")
                while self.peek()[0] == "name":
                    rhs.append(self.take()[1])
                self.expect(")")
                cls = GAtom if head == "gdep" else FAtom
                return cls(frozenset(lhs), frozenset(rhs))
            args = []
            if not (self.peek()[0] == "op" and self.peek()[1] == ")"):
                args.append(self.name())
                while self.peek()[1] == "," and self.peek()[0] == "op":
                    self.take()
                    args.append(self.name())
            self.expect(")")
            return RelLiteral(True, head, tuple(args))
        if nxt[0] == "op" and nxt[1] in ("=", "!="):
            self.take()
            right = self.name()
            return EqLiteral(nxt[1] == "=", head, right)
        raise ParseError(f"expected '(', '=' or '!=' after {head!r}", nxt[2])


def parse_formula(text: str):
    return _Parser(text).parse()
