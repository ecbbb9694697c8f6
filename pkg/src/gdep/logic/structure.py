"""Finite relational structures and their text format.

::

    # comment
    universe: 0 1
    relation P/1: (0)
    relation R/2: (0,1) (1,0)
    relation Q/0: ()

The universe line comes first; a relation line may list no tuples at all.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import FormatError

_REL_LINE = re.compile(r"relation\s+([^\s/:]+)\s*/\s*(\d+)\s*:(.*)$")
_TUPLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Structure:
    universe: tuple
    relations: dict = field(default_factory=dict)   # name -> frozenset of tuples
    arities: dict = field(default_factory=dict)     # name -> arity

    def __post_init__(self):
        universe = tuple(self.universe)
        object.__setattr__(self, "universe", universe)
        if not universe:
            raise FormatError("structure universe must be nonempty")
        if len(set(universe)) != len(universe):
            raise FormatError("structure universe has repeated elements")
        elements = set(universe)
        rels = {name: frozenset(tuple(t) for t in ts)
                for name, ts in self.relations.items()}
        arities = dict(self.arities)
        for name, ts in rels.items():
            if name not in arities:
                lengths = {len(t) for t in ts}
                if len(lengths) != 1:
                    raise FormatError(f"cannot infer arity of relation {name}")
                arities[name] = lengths.pop()
            for t in ts:
                if len(t) != arities[name]:
                    raise FormatError(f"relation {name}/{arities[name]}: tuple "
                                      f"{t} has the wrong arity")
                outside = [a for a in t if a not in elements]
                if outside:
                    raise FormatError(f"relation {name}: element {outside[0]!r} "
                                      f"is not in the universe")
        for name in arities:
            rels.setdefault(name, frozenset())
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "arities", arities)

    @property
    def vocabulary(self) -> dict:
        return dict(self.arities)


def load_structure(source) -> Structure:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    universe = None
    relations: dict[str, set] = {}
    arities: dict[str, int] = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if universe is None:
            if not line.startswith("universe:"):
                raise FormatError(f"line {lineno}: expected 'universe:' first")
            universe = line[len("universe:"):].split()
            if not universe:
                raise FormatError(f"line {lineno}: empty universe")
            if len(set(universe)) != len(universe):
                raise FormatError(f"line {lineno}: repeated universe element")
            continue
        m = _REL_LINE.match(line)
        if not m:
            raise FormatError(f"line {lineno}: expected 'relation NAME/ARITY: ...'")
        name, arity, rest = m.group(1), int(m.group(2)), m.group(3)
        if name in arities:
            raise FormatError(f"line {lineno}: duplicate relation {name}")
        if _TUPLE.sub("", rest).strip():
            raise FormatError(f"line {lineno}: junk outside tuples in {rest.strip()!r}")
        tuples = set()
        for body in _TUPLE.findall(rest):
            t = tuple(a.strip() for a in body.split(",")) if body.strip() else ()
            if len(t) != arity:
                raise FormatError(f"line {lineno}: tuple ({body}) does not have "
                                  f"arity {arity}")
            for a in t:
                if a not in universe:
                    raise FormatError(f"line {lineno}: element {a!r} is not in the "
                                      f"universe")
            tuples.add(t)
        relations[name] = tuples
        arities[name] = arity
    if universe is None:
        raise FormatError("structure file has no 'universe:' line")
    return Structure(tuple(universe), relations, arities)


def read_structure(path) -> Structure:
    with open(path, "rb") as fh:
        return load_structure(fh)


def format_structure(m: Structure) -> str:
    lines = [f"universe: {' '.join(m.universe)}"]
    for name in sorted(m.arities):
        ts = " ".join(f"({','.join(t)})" for t in sorted(m.relations[name]))
        lines.append(f"relation {name}/{m.arities[name]}: {ts}".rstrip())
    return "\n".join(lines) + "\n"
