import io
import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from gdep import (DomainError, FormatError, GAtom, Team, check_fdep, check_gdep,
                  emit_team, load_team, mine_gdeps)
from gdep.sampling import random_team
from oracles import fdep_holds, gdep_holds, subsets


def test_load_fig2(fig2):
    assert fig2.columns == ("x0", "x1", "y0", "y1")
    assert fig2.rows == (("0", "0", "0", "0"), ("1", "0", "1", "0"),
                         ("0", "0", "0", "0"), ("0", "0", "0", "0"))
    assert fig2.value(0, "x0") == "0"
    assert fig2.value(3, "x1") == "0"
    assert fig2.value(1, "y0") == "1"


def test_header_only_is_empty_team():
    team = load_team(b"a\n")
    assert team.domain == {"a"}
    assert len(team) == 0


@pytest.mark.parametrize("text", [b"a,a\n1,2\n", b"x,y,x\n"])
def test_duplicate_header(text):
    with pytest.raises(FormatError, match="duplicate"):
        load_team(text)


@pytest.mark.parametrize("text, msg", [
    (b"", "header"),
    (b"a,b\n1,2\n3\n", "expected 2 values"),
    (b"a,b\n1, 2\n", "whitespace"),
    (b"a b,c\n", "invalid variable"),
    (b"a,b\n\xff,1\n", "UTF-8"),
])
def test_format_errors(text, msg):
    with pytest.raises(FormatError, match=msg):
        load_team(text)


def test_values_are_opaque_strings():
    team = load_team("a,b\n1,01\n")
    assert not check_fdep(Team(("a", "b"), (("1", "1"), ("1", "01"))), {"a"}, {"b"})
    assert team.value(0, "b") == "01"


def test_duplicates_and_order_preserved():
    text = "a,b\n1,2\n1,2\n0,0\n"
    team = load_team(io.BytesIO(text.encode()))
    assert emit_team(team) == text
    assert team.rows[0] == team.rows[1]


def test_empty_domain_round_trip():
    team = Team((), ((), ()))
    assert load_team(emit_team(team)) == team


@given(st.integers(0, 4), st.integers(0, 6), st.randoms(use_true_random=False))
def test_round_trip(ncols, nrows, rng):
    cols = tuple(f"c{i}" for i in range(ncols))
    rows = tuple(tuple(rng.choice(["0", "x", "€", "a-b", ""]) for _ in cols)
                 for _ in range(nrows))
    team = Team(cols, rows)
    assert load_team(emit_team(team).encode()) == team


def test_fig2_judgments(fig2):
    assert check_gdep(fig2, {"x0"}, {"y0"})
    assert check_gdep(fig2, {"x0", "x1"}, {"y0"})
    assert check_gdep(fig2, {"x0", "y0"}, {"y1"})
    assert not check_gdep(fig2, {"x0", "x1"}, {"y1"})


def test_salary_table(salary):
    assert check_fdep(salary, {"Title"}, {"Salary"})
    assert check_fdep(salary, {"Title", "YearsOfExperience"}, {"Salary"})
    assert not check_gdep(salary, {"Title", "YearsOfExperience"}, {"Salary"})


def test_empty_lhs_always_holds(fig2, salary):
    for team in (fig2, salary, Team(("a",), ())):
        for y in subsets(team.columns):
            assert check_gdep(team, set(), y)


def test_fdep_reflexive_and_fig2(fig2):
    assert check_fdep(fig2, {"x0", "y1"}, {"x0", "y1"})
    # exhaustive pairwise scan: x0 and y0 carry identical columns
    assert check_fdep(fig2, {"x0"}, {"y0"})


def test_fdep_empty_lhs_means_constant(fig2):
    assert check_fdep(fig2, set(), {"x1", "y1"})
    assert not check_fdep(fig2, set(), {"x0"})


def test_domain_error(fig2):
    with pytest.raises(DomainError, match="'w'"):
        check_gdep(fig2, {"w"}, {"y0"})
    with pytest.raises(DomainError):
        check_fdep(fig2, {"x0"}, {"nope"})


def test_constancy_atom(fig2):
    for v in fig2.columns:
        constant = len({fig2.value(i, v) for i in range(len(fig2))}) <= 1
        assert check_gdep(fig2, {v}, set()) == constant


def _rows(team):
    return [dict(zip(team.columns, r)) for r in team.rows]


def test_checks_match_brute_force():
    rng = random.Random(7)
    cols = ("a", "b", "c", "d")
    for _ in range(300):
        team = random_team(rng, cols, max_rows=6, n_values=2)
        rows = _rows(team)
        x, y = frozenset(rng.sample(cols, rng.randint(0, 3))), frozenset(rng.sample(cols, rng.randint(0, 3)))
        assert check_gdep(team, x, y) == gdep_holds(rows, x, y)
        assert check_fdep(team, x, y) == fdep_holds(rows, x, y)


team_st = st.builds(
    lambda rows: Team(("a", "b", "c", "d"), rows),
    st.lists(st.tuples(*[st.sampled_from("012")] * 4), max_size=6))
varset_st = st.frozensets(st.sampled_from("abcd"))


@settings(max_examples=150)
@given(team_st, varset_st, varset_st, st.data())
def test_structural_invariances(team, x, y, data):
    g, f = check_gdep(team, x, y), check_fdep(team, x, y)
    perm = data.draw(st.permutations(range(len(team))))
    shuffled = team.subteam(perm)
    assert check_gdep(shuffled, x, y) == g and check_fdep(shuffled, x, y) == f
    if len(team):
        i = data.draw(st.integers(0, len(team) - 1))
        doubled = team.subteam(list(range(len(team))) + [i])
        assert check_gdep(doubled, x, y) == g and check_fdep(doubled, x, y) == f
    keep = data.draw(st.lists(st.integers(0, max(len(team) - 1, 0)), unique=True))
    if g:
        assert check_gdep(team.subteam(sorted(k for k in keep if k < len(team))), x, y)
    local = team.project(x | y)
    assert check_gdep(local, x, y) == g and check_fdep(local, x, y) == f


@settings(max_examples=150)
@given(team_st, varset_st, varset_st, varset_st)
def test_split_equivalence_and_weakening(team, x, y, z):
    g = check_gdep(team, x, y)
    assert g == all(check_gdep(team, {xi}, (x - {xi}) | y) for xi in x)
    if g:
        assert check_gdep(team, x, y | z)


def test_column_order_irrelevant(fig2):
    for perm in permutations(range(4)):
        cols = tuple(fig2.columns[i] for i in perm)
        t = Team(cols, tuple(tuple(r[i] for i in perm) for r in fig2.rows))
        assert not check_gdep(t, {"x0", "x1"}, {"y1"})
        assert check_gdep(t, {"x0", "y0"}, {"y1"})


def test_mine_fig2(fig2):
    atoms = mine_gdeps(fig2, 1)
    x0 = [a for a in atoms if a.lhs == {"x0"}]
    assert GAtom(frozenset({"x0"}), frozenset({"y0"})) in x0
    assert GAtom(frozenset({"x0"}), frozenset()) not in x0
    for a in atoms:
        assert not a.lhs & a.rhs
        assert check_gdep(fig2, a.lhs, a.rhs)
        for v in a.rhs:
            assert not check_gdep(fig2, a.lhs, a.rhs - {v})
    assert atoms == sorted(atoms, key=lambda a: a.sort_key())


def test_mine_is_complete_for_minimal_rhs(salary):
    atoms = set(mine_gdeps(salary, 2))
    cols = salary.columns
    for x in subsets(cols):
        if not 1 <= len(x) <= 2:
            continue
        for y in subsets(set(cols) - x):
            ok = check_gdep(salary, x, y)
            minimal = ok and all(not check_gdep(salary, x, y - {v}) for v in y)
            assert (GAtom(x, y) in atoms) == minimal


@pytest.mark.parametrize("rows", [(), (("1", "2", "3"),)])
def test_mine_vacuous(rows):
    team = Team(("a", "b", "c"), rows)
    atoms = mine_gdeps(team, 2)
    assert all(a.rhs == frozenset() for a in atoms)
    assert {a.lhs for a in atoms} == {x for x in subsets("abc") if 1 <= len(x) <= 2}


def test_mine_bound():
    with pytest.raises(ValueError):
        mine_gdeps(Team(("a",), ()), 0)
