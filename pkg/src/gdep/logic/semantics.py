"""Team semantics for G-dependence logic and dependence logic.

A formula is evaluated on a whole team:

* dependence atoms are checked on the current team;
* literals must hold in every row;
* ``phi | psi`` holds iff the rows can be covered by two (possibly
  overlapping) subteams satisfying phi and psi respectively;
* ``E x. phi`` picks one value per row;
* ``A x. phi`` pairs every row with every universe element.

The search for covers and choice functions is exhaustive backtracking with
no caching, bounded by the guards in EvalContext.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..atoms import FAtom, GAtom
from ..errors import ContractError, DomainError, SizeError
from ..team import Team, check_fdep, check_gdep
from .structure import Structure
from .syntax import (And, EqLiteral, Exists, Forall, Or, RelLiteral,
                     free_vars, has_dependence_atoms, subformulas)

EMPTY_ASSIGNMENT_TEAM = Team((), ((),))


@dataclass(frozen=True)
class EvalContext:
    structure: Structure
    team: Team = EMPTY_ASSIGNMENT_TEAM
    max_split_rows: int = 10
    max_choices: int = 10**6
    max_rows: int = 10**5


def _check_vocabulary(structure: Structure, phi) -> None:
    for sub in subformulas(phi):
        if isinstance(sub, RelLiteral):
            if sub.name not in structure.arities:
                raise DomainError(f"relation {sub.name!r} is not in the vocabulary")
            if structure.arities[sub.name] != len(sub.args):
                raise DomainError(f"relation {sub.name} has arity "
                                  f"{structure.arities[sub.name]}, used with "
                                  f"{len(sub.args)} arguments")


def _check_context(ctx: EvalContext, phi) -> None:
    _check_vocabulary(ctx.structure, phi)
    missing = free_vars(phi) - ctx.team.domain
    if missing:
        raise DomainError(f"free variables {', '.join(sorted(missing))} are not "
                          f"in the team domain")
    elements = set(ctx.structure.universe)
    for row in ctx.team.rows:
        for col, val in zip(ctx.team.columns, row):
            if val not in elements:
                raise DomainError(f"team value {val!r} in column {col} is not a "
                                  f"universe element")


def _extend(cols: tuple, var: str) -> tuple[tuple, int]:
    """Columns after binding var, and the index var's values go to."""
    if var in cols:
        return cols, cols.index(var)
    return cols + (var,), len(cols)


def _with_value(row: tuple, at: int, value) -> tuple:
    if at == len(row):
        return row + (value,)
    return row[:at] + (value,) + row[at + 1:]


class _Evaluator:
    def __init__(self, ctx: EvalContext):
        self.ctx = ctx
        self.universe = ctx.structure.universe
        self.relations = ctx.structure.relations

    def holds(self, phi, cols: tuple, rows: list) -> bool:
        try:
            method = self._dispatch[type(phi)]
        except KeyError:
            raise TypeError(f"not a formula: {phi!r}") from None
        return method(self, phi, cols, rows)

    def _rel(self, phi: RelLiteral, cols, rows) -> bool:
        idx = [cols.index(a) for a in phi.args]
        rel = self.relations[phi.name]
        return all((tuple(r[i] for i in idx) in rel) == phi.positive for r in rows)

    def _eq(self, phi: EqLiteral, cols, rows) -> bool:
        i, j = cols.index(phi.left), cols.index(phi.right)
        return all((r[i] == r[j]) == phi.positive for r in rows)

    def _gdep(self, phi: GAtom, cols, rows) -> bool:
        return check_gdep(Team._trusted(cols, rows), phi.lhs, phi.rhs)

    def _fdep(self, phi: FAtom, cols, rows) -> bool:
        return check_fdep(Team._trusted(cols, rows), phi.lhs, phi.rhs)

    def _and(self, phi: And, cols, rows) -> bool:
        return self.holds(phi.left, cols, rows) and self.holds(phi.right, cols, rows)

    def _disjunction(self, phi: Or, cols, rows) -> bool:
        n = len(rows)
        if n > self.ctx.max_split_rows:
            raise SizeError(f"disjunction: team of {n} rows exceeds the split "
                            f"guard of {self.ctx.max_split_rows} rows")
        full = (1 << n) - 1

        def pick(mask):
            return [rows[i] for i in range(n) if mask >> i & 1]

        for j in range(full + 1):
            if not self.holds(phi.left, cols, pick(j)):
                continue
            rest = full & ~j
            # K ranges over rest plus any subset of J; disjoint split first
            extra = 0
            while True:
                if self.holds(phi.right, cols, pick(rest | extra)):
                    return True
                if extra == j:
                    break
                extra = (extra - j) & j
        return False

    def _exists(self, phi: Exists, cols, rows) -> bool:
        n, m = len(rows), len(self.universe)
        if m ** n > self.ctx.max_choices:
            raise SizeError(f"existential E {phi.var}: {m}^{n} choice functions "
                            f"exceed the guard of {self.ctx.max_choices}")
        new_cols, at = _extend(cols, phi.var)
        for choice in product(self.universe, repeat=n):
            new_rows = [_with_value(r, at, a) for r, a in zip(rows, choice)]
            if self.holds(phi.body, new_cols, new_rows):
                return True
        return False

    def _forall(self, phi: Forall, cols, rows) -> bool:
        size = len(rows) * len(self.universe)
        if size > self.ctx.max_rows:
            raise SizeError(f"universal A {phi.var}: expanded team of {size} rows "
                            f"exceeds the guard of {self.ctx.max_rows}")
        new_cols, at = _extend(cols, phi.var)
        new_rows = [_with_value(r, at, a) for r in rows for a in self.universe]
        return self.holds(phi.body, new_cols, new_rows)

    _dispatch = {RelLiteral: _rel, EqLiteral: _eq, GAtom: _gdep, FAtom: _fdep,
                 And: _and, Or: _disjunction, Exists: _exists, Forall: _forall}


def evaluate(ctx: EvalContext, phi) -> bool:
    """M |=_X phi for the structure and team of ctx."""
    _check_context(ctx, phi)
    return _Evaluator(ctx).holds(phi, ctx.team.columns, list(ctx.team.rows))


def evaluate_sentence(structure: Structure, phi, **guards) -> bool:
    """Evaluate on the team holding the single empty assignment."""
    return evaluate(EvalContext(structure, EMPTY_ASSIGNMENT_TEAM, **guards), phi)


def eval_first_order_oracle(ctx: EvalContext, phi) -> bool:
    """Classical Tarskian truth in every row, evaluated row by row."""
    if has_dependence_atoms(phi):
        raise ContractError("first-order oracle needs a dependence-atom-free formula")
    _check_context(ctx, phi)
    universe = ctx.structure.universe
    relations = ctx.structure.relations

    def sat(f, s: dict) -> bool:
        if isinstance(f, RelLiteral):
            return (tuple(s[a] for a in f.args) in relations[f.name]) == f.positive
        if isinstance(f, EqLiteral):
            return (s[f.left] == s[f.right]) == f.positive
        if isinstance(f, And):
            return sat(f.left, s) and sat(f.right, s)
        if isinstance(f, Or):
            return sat(f.left, s) or sat(f.right, s)
        if isinstance(f, Exists):
            return any(sat(f.body, {**s, f.var: a}) for a in universe)
        if isinstance(f, Forall):
            return all(sat(f.body, {**s, f.var: a}) for a in universe)
        raise TypeError(f"not a first-order formula: {f!r}")

    cols = ctx.team.columns
    return all(sat(phi, dict(zip(cols, row))) for row in ctx.team.rows)
