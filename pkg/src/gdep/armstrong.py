"""Armstrong relations: one team satisfying exactly the derivable atoms.

Every non-derivable single-antecedent atom over the universe contributes a
two-row block refuting it.  Block k draws its values from {2k, 2k+1}, so rows
of different blocks differ on every non-constant column and never witness a
failure on their own.  Columns that sigma forces to be constant are 0
everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .atoms import GAtom, variables_of
from .calculus import CLOSURE_LIMIT, _as_atom_set, _prepare, entails
from .errors import ContractError, SizeError
from .team import Team, check_gdep


@dataclass(frozen=True)
class ArmstrongSpec:
    sigma: frozenset
    universe: frozenset
    bound: int = CLOSURE_LIMIT

    def __post_init__(self):
        object.__setattr__(self, "sigma", _as_atom_set(self.sigma))
        object.__setattr__(self, "universe", frozenset(self.universe))
        missing = variables_of(self.sigma) - self.universe
        if missing:
            raise ContractError(f"sigma mentions variables outside the universe: "
                                f"{', '.join(sorted(missing))}")
        if len(self.universe) > self.bound:
            raise SizeError(f"universe of {len(self.universe)} variables exceeds "
                            f"bound {self.bound}")


def _subsets(names):
    for size in range(len(names) + 1):
        yield from combinations(names, size)


def refuting_blocks(spec: ArmstrongSpec) -> list[tuple[GAtom, frozenset]]:
    """(atom, differing columns) for each non-derivable single-antecedent atom,
    in canonical atom order."""
    prem = _prepare(spec.sigma)
    names = sorted(spec.universe)
    blocks = []
    for v in names:
        for w in _subsets(names):
            reach = prem.closure(w)
            if v not in reach:
                blocks.append((GAtom(frozenset((v,)), frozenset(w)),
                               spec.universe - frozenset(reach)))
    return blocks


def build_armstrong(spec: ArmstrongSpec) -> Team:
    columns = tuple(sorted(spec.universe))
    if not columns:
        return Team((), ())
    constant = frozenset(_prepare(spec.sigma).closure(()))
    blocks = refuting_blocks(spec)
    if not blocks:
        return Team(columns, (("0",) * len(columns),))
    rows = []
    for k, (_, differing) in enumerate(blocks):
        lo, hi = str(2 * k), str(2 * k + 1)
        rows.append(tuple("0" if c in constant else lo for c in columns))
        rows.append(tuple("0" if c in constant else hi if c in differing else lo
                          for c in columns))
    return Team(columns, tuple(rows))


@dataclass(frozen=True)
class Violation:
    atom: GAtom
    expected: bool
    got: bool

    def __str__(self):
        return f"{self.atom}: expected {str(self.expected).lower()}, got {str(self.got).lower()}"


@dataclass
class ArmstrongReport:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def format(self) -> str:
        return "".join(f"{v}\n" for v in self.violations)


def verify_armstrong(team: Team, sigma, bound: int = CLOSURE_LIMIT,
                     multi_antecedent: bool = False) -> ArmstrongReport:
    """Compare team satisfaction with derivability for every atom over dom(team).

    Single-antecedent atoms suffice, since every atom is equivalent to the
    conjunction of its single-antecedent splits; multi_antecedent=True checks
    every lhs anyway.
    """
    sigma = _as_atom_set(sigma)
    names = sorted(team.columns)
    if len(names) > bound:
        raise SizeError(f"team has {len(names)} columns, bound is {bound}")
    report = ArmstrongReport()
    if multi_antecedent:
        lhss = list(_subsets(names))
    else:
        lhss = [(v,) for v in names]
    for lhs in lhss:
        for rhs in _subsets(names):
            atom = GAtom(frozenset(lhs), frozenset(rhs))
            want = entails(sigma, atom).verdict
            got = check_gdep(team, atom.lhs, atom.rhs)
            report.checked += 1
            if want != got:
                report.violations.append(Violation(atom, want, got))
    return report
