"""Brute-force reference checks written straight from the definitions.

Nothing here imports the package: atoms are (lhs, rhs) pairs of frozensets
and teams are lists of dicts.
"""

from itertools import combinations, product


def subsets(names):
    names = sorted(names)
    for k in range(len(names) + 1):
        for c in combinations(names, k):
            yield frozenset(c)


def gdep_holds(rows, x, y):
    for s in rows:
        for t in rows:
            differing = [v for v in x if s[v] != t[v]]
            if len(differing) == 1 and all(s[w] == t[w] for w in y):
                return False
    return True


def fdep_holds(rows, x, y):
    for s in rows:
        for t in rows:
            if all(s[v] == t[v] for v in x) and any(s[w] != t[w] for w in y):
                return False
    return True


def pair_rows(names, differing):
    return [{v: 0 for v in names}, {v: int(v in differing) for v in names}]


def two_row_entails(sigma, goal, names):
    """sigma |= goal over all two-row binary teams on `names`."""
    for d in subsets(names):
        rows = pair_rows(names, d)
        if all(gdep_holds(rows, x, y) for x, y in sigma) and not gdep_holds(rows, *goal):
            return False
    return True


def small_team_entails(sigma, goal, names, n_rows=3, n_values=2):
    """sigma |= goal over every team with at most n_rows rows and n_values values."""
    names = sorted(names)
    assignments = [dict(zip(names, vals)) for vals in product(range(n_values), repeat=len(names))]
    for k in range(n_rows + 1):
        for rows in product(assignments, repeat=k):
            if all(gdep_holds(rows, x, y) for x, y in sigma) and not gdep_holds(rows, *goal):
                return False
    return True
