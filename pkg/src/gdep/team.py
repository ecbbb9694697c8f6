"""Teams (tables with duplicate rows allowed) and semantic atom checks.

A team is a finite indexed multiset of assignments: a header of distinct
variable names and an ordered list of rows, each row a total assignment of
opaque string values.  Values compare by exact string equality.

CSV dialect: comma separated, no quoting, no surrounding whitespace in any
cell.  The first record is the header.  A header-only file is the empty
team over that header.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError, FormatError

_BAD_NAME = re.compile(r"[\s;(),]")


def is_variable_name(name: str) -> bool:
    return bool(name) and not _BAD_NAME.search(name)


def fmt_vars(vs: Iterable[str]) -> str:
    """Canonical printed form of a variable set: sorted, space separated."""
    return " ".join(sorted(vs))


@dataclass(frozen=True)
class Team:
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        columns = tuple(self.columns)
        rows = tuple(tuple(r) for r in self.rows)
        if len(set(columns)) != len(columns):
            raise FormatError(f"duplicate variable in header: {list(columns)}")
        for i, row in enumerate(rows):
            if len(row) != len(columns):
                raise FormatError(
                    f"row {i} has {len(row)} values, header has {len(columns)}")
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _trusted(cls, columns: tuple, rows) -> "Team":
        """Build without validation; callers guarantee well-formed rows."""
        team = object.__new__(cls)
        object.__setattr__(team, "columns", columns)
        object.__setattr__(team, "rows", tuple(rows))
        return team

    @classmethod
    def from_dicts(cls, columns: Sequence[str], records: Iterable[dict]) -> "Team":
        columns = tuple(columns)
        return cls(columns, tuple(tuple(str(r[c]) for c in columns) for r in records))

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self.columns)

    def __len__(self):
        return len(self.rows)

    def index_of(self, var: str) -> int:
        try:
            return self.columns.index(var)
        except ValueError:
            raise DomainError(f"variable {var!r} is not in the team domain "
                              f"{{{fmt_vars(self.columns)}}}") from None

    def value(self, row: int, var: str) -> str:
        return self.rows[row][self.index_of(var)]

    def indices(self, vs: Iterable[str]) -> tuple[int, ...]:
        return tuple(self.index_of(v) for v in sorted(vs))

    def project(self, vs: Iterable[str]) -> "Team":
        """Keep only the given columns (in their current order)."""
        keep = set(vs)
        for v in keep:
            self.index_of(v)
        idx = [i for i, c in enumerate(self.columns) if c in keep]
        return Team(tuple(self.columns[i] for i in idx),
                    tuple(tuple(r[i] for i in idx) for r in self.rows))

    def subteam(self, row_indices: Iterable[int]) -> "Team":
        return Team(self.columns, tuple(self.rows[i] for i in row_indices))

    def deduplicated(self) -> "Team":
        """The duplicate-free companion: first occurrence of each row kept."""
        return Team(self.columns, tuple(dict.fromkeys(self.rows)))


def binary_pair_team(columns: Iterable[str], differing: Iterable[str]) -> Team:
    """Two-row team over {0,1}: row 0 all zero, row 1 is 1 exactly on `differing`."""
    columns = tuple(sorted(columns))
    differing = frozenset(differing)
    return Team(columns, (("0",) * len(columns),
                          tuple("1" if c in differing else "0" for c in columns)))


# -- CSV ---------------------------------------------------------------------

def load_team(source) -> Team:
    """Read a team from a binary or text stream, bytes or str."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError(f"team file is not valid UTF-8: {e}") from None
    if not source:
        raise FormatError("empty team file: a header record is required")
    records = list(csv.reader(io.StringIO(source, newline=""),
                              delimiter=",", quoting=csv.QUOTE_NONE))
    if not records:
        raise FormatError("empty team file: a header record is required")
    header, body = records[0], records[1:]
    for name in header:
        if not is_variable_name(name):
            raise FormatError(f"invalid variable name in header: {name!r}")
    if len(set(header)) != len(header):
        dup = sorted({h for h in header if header.count(h) > 1})
        raise FormatError(f"duplicate variable in header: {', '.join(dup)}")
    if len(header) == 1:
        # a blank line is the single empty value, not a zero-arity record
        body = [rec or [""] for rec in body]
    for lineno, rec in enumerate(body, start=2):
        if len(rec) != len(header):
            raise FormatError(f"line {lineno}: expected {len(header)} values, "
                              f"got {len(rec)}")
        for cell in rec:
            if cell != cell.strip():
                raise FormatError(f"line {lineno}: surrounding whitespace in "
                                  f"value {cell!r}")
    return Team(tuple(header), tuple(tuple(r) for r in body))


def read_team(path) -> Team:
    with open(path, "rb") as fh:
        return load_team(fh)


def emit_team(team: Team) -> str:
    lines = [",".join(team.columns)]
    lines.extend(",".join(row) for row in team.rows)
    return "\n".join(lines) + "\n"


def write_team(team: Team, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(emit_team(team))


# -- semantic checks -----------------------------------------------------------

def check_gdep(team: Team, x: Iterable[str], y: Iterable[str]) -> bool:
    """True iff any two rows differing on exactly one variable of x differ on y."""
    xi = team.indices(frozenset(x))
    yi = team.indices(frozenset(y))
    if not xi:
        return True
    xs = [tuple(r[i] for i in xi) for r in team.rows]
    ys = [tuple(r[i] for i in yi) for r in team.rows]
    n = len(xs)
    for s in range(n):
        xs_s, ys_s = xs[s], ys[s]
        for t in range(s + 1, n):
            diff = 0
            for a, b in zip(xs_s, xs[t]):
                if a != b:
                    diff += 1
                    if diff > 1:
                        break
            if diff == 1 and ys_s == ys[t]:
                return False
    return True


def check_fdep(team: Team, x: Iterable[str], y: Iterable[str]) -> bool:
    """True iff rows agreeing on all of x agree on all of y."""
    xi = team.indices(frozenset(x))
    yi = team.indices(frozenset(y))
    seen: dict[tuple, tuple] = {}
    for r in team.rows:
        key = tuple(r[i] for i in xi)
        val = tuple(r[i] for i in yi)
        if seen.setdefault(key, val) != val:
            return False
    return True


def holds(team: Team, atom) -> bool:
    """Dispatch on atom kind (G-dependence or functional dependence)."""
    from .atoms import FAtom, GAtom

    if isinstance(atom, GAtom):
        return check_gdep(team, atom.lhs, atom.rhs)
    if isinstance(atom, FAtom):
        return check_fdep(team, atom.lhs, atom.rhs)
    raise TypeError(f"not a dependence atom: {atom!r}")


def mine_gdeps(team: Team, antecedent_bound: int) -> list:
    """All G-dependence atoms with |lhs| <= bound, disjoint sides and a
    minimal right-hand side that hold in the team, in canonical order."""
    from .atoms import GAtom

    if antecedent_bound < 1:
        raise ValueError("antecedent_bound must be at least 1")
    cols = sorted(team.columns)
    found = []
    for k in range(1, min(antecedent_bound, len(cols)) + 1):
        for lhs in combinations(cols, k):
            rest = [c for c in cols if c not in lhs]
            minimal: list[frozenset] = []
            # holding is upward closed in the rhs, so scan by size and skip supersets
            for size in range(len(rest) + 1):
                for rhs in combinations(rest, size):
                    rs = frozenset(rhs)
                    if any(m <= rs for m in minimal):
                        continue
                    if check_gdep(team, lhs, rs):
                        minimal.append(rs)
            found.extend(GAtom(frozenset(lhs), m) for m in minimal)
    return sorted(found, key=lambda a: a.sort_key())
