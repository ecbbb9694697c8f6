"""Seeded random generators for teams and atom sets, used by cross-checks."""

from __future__ import annotations

import random

from .atoms import GAtom
from .team import Team


def var_names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def random_subset(rng: random.Random, names, p: float = 0.4) -> frozenset:
    return frozenset(v for v in names if rng.random() < p)


def random_gatom(rng: random.Random, names, max_lhs: int = 2) -> GAtom:
    k = rng.randint(1, min(max_lhs, len(names)))
    return GAtom(frozenset(rng.sample(list(names), k)), random_subset(rng, names))


def random_sigma(rng: random.Random, names, max_atoms: int = 4,
                 max_lhs: int = 2) -> frozenset:
    return frozenset(random_gatom(rng, names, max_lhs)
                     for _ in range(rng.randint(0, max_atoms)))


def random_team(rng: random.Random, columns, max_rows: int = 8,
                n_values: int = 3) -> Team:
    columns = tuple(columns)
    rows = tuple(tuple(str(rng.randrange(n_values)) for _ in columns)
                 for _ in range(rng.randint(0, max_rows)))
    return Team(columns, rows)
