"""Exhaustive small suite for the evaluator: structures with at most two
elements, teams of at most three rows over columns x, y, and every formula of
connective depth <= 2 built from a fixed atom pool (z is the only bound
variable, and only formulas whose free variables lie in {x, y} are kept)."""

from itertools import combinations, combinations_with_replacement, product

from gdep.atoms import FAtom, GAtom
from gdep.logic import And, EqLiteral, Exists, Forall, Or, RelLiteral, Structure, free_vars
from gdep.team import Team

F = frozenset
COLUMNS = ("x", "y")

ATOM_POOL = (
    RelLiteral(True, "P", ("x",)),
    RelLiteral(False, "P", ("z",)),
    EqLiteral(True, "y", "z"),
    EqLiteral(False, "x", "y"),
    GAtom(F({"x", "z"}), F({"y"})),
    GAtom(F({"y"}), F()),
    GAtom(F(), F({"x"})),
    FAtom(F({"z"}), F({"x"})),
    FAtom(F({"x"}), F()),
)


def structures():
    out = []
    for universe in (("0",), ("0", "1")):
        for k in range(len(universe) + 1):
            for ext in combinations(universe, k):
                out.append(Structure(universe, {"P": {(a,) for a in ext}}, {"P": 1}))
    return out


def teams(universe, max_rows=3):
    """Every multiset of at most max_rows rows, rows kept sorted."""
    assignments = list(product(universe, repeat=len(COLUMNS)))
    out = []
    for n in range(max_rows + 1):
        for rows in combinations_with_replacement(assignments, n):
            out.append(Team(COLUMNS, rows))
    return out


def _grow(level):
    out = []
    items = list(level)
    for i, a in enumerate(items):
        for b in items[i:]:
            out.append(And(a, b))
            out.append(Or(a, b))
    for a in items:
        out.append(Exists("z", a))
        out.append(Forall("z", a))
    return out


def formulas(max_depth=2):
    """All formulas up to max_depth over ATOM_POOL, deduplicated, closed in z."""
    seen = dict.fromkeys(ATOM_POOL)
    frontier = list(ATOM_POOL)
    for _ in range(max_depth):
        grown = [f for f in _grow(seen) if f not in seen]
        seen.update(dict.fromkeys(grown))
        frontier = grown
    return [f for f in seen if free_vars(f) <= set(COLUMNS)]


def sub_multisets(team):
    """All row-subsets of team, as sorted teams (which are suite members)."""
    n = len(team.rows)
    out = set()
    for k in range(n + 1):
        for idx in combinations(range(n), k):
            out.add(Team(team.columns, tuple(team.rows[i] for i in idx)))
    return out


def dedup(team):
    return Team(team.columns, tuple(sorted(set(team.rows))))
